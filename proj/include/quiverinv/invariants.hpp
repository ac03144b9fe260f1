#ifndef QUIVERINV_INVARIANTS_HPP
#define QUIVERINV_INVARIANTS_HPP

#include <vector>

#include "quiverinv/quiver.hpp"

namespace quiverinv {

/// Descriptor of a characteristic-polynomial invariant: the coefficient of
/// t^{n-k} in det(tI - cycle product), 1 <= k <= n.
struct CharPolyInvariant {
    int k = 1;
};

/// Descriptor of a double-quiver trace invariant: the trace of the closed
/// path with r forward steps followed (on the left) by s backward steps,
/// based at vertex 1. Closing up requires r == s (mod m).
struct TraceWord {
    int r = 0;
    int s = 0;
    int m = 1;

    TraceWord(int r_, int s_, int m_) : r(r_), s(s_), m(m_) {
        if (m < 1) throw InputError("TraceWord: modulus must be >= 1");
        if (r < 0 || s < 0 || r + s < 1) throw InputError("TraceWord: need r,s >= 0 and r+s >= 1");
        if ((r - s) % m != 0)
            throw PathClosureError("TraceWord: r and s must agree mod m for the path to close");
    }
};

Complex eval_charpoly_invariant(int k, const RepPoint& p);

/// Evaluates the trace word: starting at vertex 1, apply x_1, x_2, ...
/// cyclically ascending for r steps, then y_j, y_{j-1}, ... cyclically
/// descending for s steps (j = r mod m), and take the trace. Every factor is
/// vertex type-checked; a failure to close is a PathClosureError, never a
/// silent wrong number.
Complex eval_trace_word(const TraceWord& w, const DoubleRepPoint& p);

/// Elementary symmetric polynomial e_k(z_1^m, ..., z_n^m).
Complex eval_e_zm(int k, const LPoint& l, int m);

/// Diagonal power sum p_{r,s} = sum_i z_i^r zp_i^s.
Complex eval_p_rs(int r, int s, const LLPoint& l);

/// |charpoly coefficient k of the embedded point - (-1)^k e_k(z^m)|.
/// The (-1)^k reconciles the det(tI - A) sign convention.
double rho_identity_residual(const LPoint& l, int m, int k);

/// |trace word (r,s) on the embedded point - p_{r,s}(l)|.
double phi_identity_residual(const LLPoint& l, int m, int r, int s);

/// Diagonal assembly of n scalar moment-zero points into one rank-n point:
/// the k-th input supplies the (k,k) entries of all 2m diagonal matrices.
/// Inputs must have n = 1, share m, and satisfy the moment equations to
/// tolerance (ResidualTooLarge otherwise).
DoubleRepPoint restrict_to_product(const std::vector<DoubleRepPoint>& points);

/// |trace word on the assembly - sum of the scalar trace words|; the
/// computable shadow of the restriction/product commutative square.
double diagram_residual(const std::vector<DoubleRepPoint>& points, const TraceWord& word);

/// Default separation panel: charpoly invariants k = 1..n for the single
/// quiver, all words with r + s <= 2m + 2 for the double quiver.
std::vector<CharPolyInvariant> default_charpoly_panel(int n);
std::vector<TraceWord> default_traceword_panel(int m, int max_total = -1);

/// CLI-facing invariant descriptor, either kind. Trace words are validated
/// against the point's modulus at evaluation time.
struct InvariantDescriptor {
    enum class Kind { CharPoly, TraceWord };
    Kind kind = Kind::CharPoly;
    int k = 1;          // CharPoly: coefficient index
    int r = 0, s = 0;   // TraceWord: step counts
};

/// Charpoly descriptors evaluate on the forward half; trace words on the
/// whole point.
Complex eval_invariant(const InvariantDescriptor& d, const DoubleRepPoint& p);

/// Max relative difference of the charpoly panel between two points.
double charpoly_panel_separation(const RepPoint& p, const RepPoint& q);

}  // namespace quiverinv

#endif
