#pragma once

#include <cstdint>
#include <optional>

#include "minphase/types.hpp"

namespace minphase {

enum class ConstellationKind {
    Shifted16QAM,    // a_n = [(b+k1) + i(b+k2)] sqrt(T), k uniform in {0..levels-1}
    Shifted8AM,      // a_n = (b+k) sqrt(T), k uniform in {0..7}
    BiasedQuadrant,  // real(a_n) > a and imag(a_n) > a, uniform over a quadrant patch
};

struct Constellation {
    ConstellationKind kind = ConstellationKind::Shifted16QAM;
    double bias = 1.1;  // b for the shifted grids, a for BiasedQuadrant
    int levels = 8;     // per-quadrature levels of Shifted16QAM (8 literal, 4 optional)
};

/// A drawn symbol block. bias_field, when set, is a separate DC field added
/// by the synthesis on top of the modulated symbols.
struct SymbolSequence {
    std::vector<cplx> symbols;
    std::uint64_t seed = 0;
    Constellation constellation;
    std::optional<cplx> bias_field;
};

/// Seeded, reproducible draw of n_sym symbols (sqrt(T) units carried in the
/// values). Identical seeds give identical sequences on any platform.
SymbolSequence make_constellation(const Constellation& c, std::size_t n_sym, std::uint64_t seed,
                                  double t_sym = 1.0);

/// Nominal center of the symbol cloud, e.g. (b + (levels-1)/2)(1+i) sqrt(T).
cplx constellation_center(const Constellation& c, double t_sym);

/// Nearest grid point, ties broken toward the smaller grid index. Only the
/// discrete kinds have a decision grid.
cplx nearest_symbol(cplx value, const Constellation& c, double t_sym);

}  // namespace minphase
