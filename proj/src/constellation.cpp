#include "minphase/constellation.hpp"

#include <cmath>
#include <random>

namespace minphase {

namespace {

constexpr double kQuadrantRange = 7.0;  // matches the extent of the shifted grids

void validate(const Constellation& c) {
    switch (c.kind) {
        case ConstellationKind::Shifted16QAM:
            if (c.levels != 4 && c.levels != 8) {
                throw std::invalid_argument("Shifted16QAM: levels must be 4 or 8");
            }
            [[fallthrough]];
        case ConstellationKind::Shifted8AM:
            if (!(c.bias >= 0.0)) {
                throw std::invalid_argument("shifted constellation: bias must be >= 0");
            }
            break;
        case ConstellationKind::BiasedQuadrant:
            if (!(c.bias > 0.0)) {
                throw std::invalid_argument("BiasedQuadrant: the floor a must be positive");
            }
            break;
        default:
            throw std::invalid_argument("unknown constellation kind");
    }
}

// uniform in (0, 1]; mt19937_64 keeps draws identical across platforms
double unit_open(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

SymbolSequence make_constellation(const Constellation& c, std::size_t n_sym, std::uint64_t seed,
                                  double t_sym) {
    validate(c);
    if (n_sym == 0) {
        throw std::invalid_argument("make_constellation: n_sym must be >= 1");
    }
    const double rt = std::sqrt(t_sym);
    std::mt19937_64 rng(seed);
    std::vector<cplx> symbols(n_sym);
    switch (c.kind) {
        case ConstellationKind::Shifted16QAM: {
            const auto levels = static_cast<std::uint64_t>(c.levels);
            for (auto& s : symbols) {
                const double k1 = static_cast<double>(rng() % levels);
                const double k2 = static_cast<double>(rng() % levels);
                s = cplx{c.bias + k1, c.bias + k2} * rt;
            }
            break;
        }
        case ConstellationKind::Shifted8AM:
            for (auto& s : symbols) {
                const double k = static_cast<double>(rng() % 8);
                s = cplx{c.bias + k, 0.0} * rt;
            }
            break;
        case ConstellationKind::BiasedQuadrant:
            for (auto& s : symbols) {
                const double re = c.bias + kQuadrantRange * unit_open(rng);
                const double im = c.bias + kQuadrantRange * unit_open(rng);
                s = cplx{re, im} * rt;
            }
            break;
    }
    return SymbolSequence{std::move(symbols), seed, c, std::nullopt};
}

cplx constellation_center(const Constellation& c, double t_sym) {
    validate(c);
    const double rt = std::sqrt(t_sym);
    switch (c.kind) {
        case ConstellationKind::Shifted16QAM: {
            const double mid = c.bias + (c.levels - 1) / 2.0;
            return cplx{mid, mid} * rt;
        }
        case ConstellationKind::Shifted8AM:
            return cplx{c.bias + 3.5, 0.0} * rt;
        case ConstellationKind::BiasedQuadrant: {
            const double mid = c.bias + kQuadrantRange / 2.0;
            return cplx{mid, mid} * rt;
        }
    }
    return {};
}

cplx nearest_symbol(cplx value, const Constellation& c, double t_sym) {
    validate(c);
    const double rt = std::sqrt(t_sym);
    auto best = cplx{};
    double best_d = -1.0;
    auto consider = [&](cplx p) {
        const double d = std::norm(value - p);
        if (best_d < 0.0 || d < best_d) {  // strict: ties keep the earlier point
            best_d = d;
            best = p;
        }
    };
    switch (c.kind) {
        case ConstellationKind::Shifted16QAM:
            for (int k1 = 0; k1 < c.levels; ++k1) {
                for (int k2 = 0; k2 < c.levels; ++k2) {
                    consider(cplx{c.bias + k1, c.bias + k2} * rt);
                }
            }
            break;
        case ConstellationKind::Shifted8AM:
            for (int k = 0; k < 8; ++k) {
                consider(cplx{c.bias + k, 0.0} * rt);
            }
            break;
        case ConstellationKind::BiasedQuadrant:
            throw std::invalid_argument("nearest_symbol: BiasedQuadrant has no decision grid");
    }
    return best;
}

}  // namespace minphase
