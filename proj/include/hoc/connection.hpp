#ifndef HOC_CONNECTION_HPP
#define HOC_CONNECTION_HPP

#include "hoc/jet.hpp"

namespace hoc {

// Coefficient data of a k-th order connection in a fixed local trivialization:
//   nabla^(k) s = d^k s (symmetrized) + sum_j Gamma_j . (d^j s),  j = 0..k-1,
// where Gamma_j has k symmetric lower indices, j symmetric upper indices and
// End(E) values. Storage is dense over index tuples; symmetry in both groups
// is an invariant (enforce with symmetrize_connection on load).
struct ConnectionData {
    int n = 0, k = 1, fiber_rank = 1;
    // gammas[j][lower_flat * n^j + upper_flat] : r x r polynomial matrix
    std::vector<std::vector<PolyMatrix>> gammas;

    static ConnectionData flat(int n, int k, int r);
    static ConnectionData zero_shaped(int n, int k, int r);  // same as flat

    const PolyMatrix& gamma(int j, int lower_flat, int upper_flat) const;
    PolyMatrix& gamma(int j, int lower_flat, int upper_flat);
    bool is_flat_data() const;  // all coefficients zero
};

struct GammaLoadReport {
    bool changed = false;  // nonzero antisymmetric parts were discarded
};

// Symmetrize each Gamma_j in both index groups; only the symmetric part acts.
ConnectionData symmetrize_connection(const ConnectionData& raw, GammaLoadReport* rep = nullptr);

// nabla^(k): E -> Sym^k (x) E (identity symbol).
LinearDiffOp higher_op(const ConnectionData& c);
TensorField higher_apply(const ConnectionData& c, const std::vector<Poly>& s);

// The canonically induced first-order operator Sym^k (x) E -> Theta(2,k-1) (x) E,
//   w_{bc...e} |-> d_{[a} w_{b]c...e} + Gamma_{c...e[a}^{f...h} w_{b]f...h},
// symbol delta (x) Id; values verified to lie in Theta(2,k-1) (x) E.
LinearDiffOp induced_operator(const ConnectionData& c);

// nabla o nabla^(k): E -> Theta(2,k-1) (x) E. Throws std::logic_error if the
// order-k coefficients fail to cancel (they must; the operator has order k-1).
LinearDiffOp curvature(const ConnectionData& c);

// Splitting h: J^{k-1}E -> J^kE with pi o h = Id; top slots carry
// -sum_j Gamma_j . u_(j) so that S o h o j^{k-1} = nabla^(k).
JetSection splitting_h(const ConnectionData& c, const JetSection& u);
LinearDiffOp h_hom(const ConnectionData& c);

// nabla = S o h: the induced connection on J^{k-1}E (identity symbol;
// (Id (x) pi) o nabla = S).
struct JetConnection {
    ConnectionData data;
    LinearDiffOp op;  // J^{k-1}E -> Lambda^1 (x) J^{k-1}E
};
JetConnection jet_connection(const ConnectionData& c);

// kappa = nabla o nabla on J^{k-1}E: a homomorphism with values in
// Theta(2,k-1) (x) E inside Lambda^2 (x) J^{k-1}E (both asserted).
LinearDiffOp jet_curvature(const ConnectionData& c);
// Same operator read off in Theta(2,k-1) (x) E coordinates.
LinearDiffOp jet_curvature_theta(const ConnectionData& c);

// Theta(2,k-1) (x) E -> Lambda^2 (x) J^{k-1}E (the subbundle inclusion).
LinearDiffOp theta2_jet_inclusion(int n, int k, int r);

struct RoundtripReport {
    std::vector<CheckItem> items;
    bool all_ok() const;
};
// Forward: nabla o j^{k-1} == iota(nabla^(k)) at coefficient level.
// Reverse: the connection extracted from nabla reproduces c and S o h.
RoundtripReport roundtrip_check(const ConnectionData& c);

struct ExtractResult {
    bool ok = false;
    std::string detail;
    ConnectionData c;
};
// Reverse direction of the correspondence: read a k-th order connection off a
// jet-bundle connection with the two characterizing properties. Detects and
// reports property failures instead of guessing.
ExtractResult connection_from_jet_connection(const LinearDiffOp& nabla, int k, int r);

}  // namespace hoc

#endif
