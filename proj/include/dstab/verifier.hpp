#ifndef DSTAB_VERIFIER_HPP
#define DSTAB_VERIFIER_HPP

#include "dstab/repstab.hpp"
#include "dstab/twoblob.hpp"

#include <map>
#include <string>
#include <vector>

namespace dstab {

// One module dimension computed two ways: `rank` by writing the module as an
// explicit quotient of the free module on all diagrams and eliminating the
// relation span at delta = delta0, `count` by the combinatorial basis.  The
// two paths share nothing beyond the diagram product.
struct RankReport {
    Family family = Family::TL;
    int m = 0;
    int n = 0;
    int a = -1;  // -1: a one-sided report, no left quotient
    Rational delta0;
    Integer rank;
    Integer count;
    bool agree = false;
};

// Dimension of A_n tensored over the right-embedded A_{n-m} with the trivial
// module, straight from the presentation: the free module on all n-dot
// diagrams modulo b*emb(u) - b for invertible u and b*emb(v) for every other
// v, where emb places A_{n-m} on the last n-m dots.  Exact elimination at
// delta = delta0.  Throws std::invalid_argument unless 0 <= m <= n and
// delta0 is admissible at size n.
Integer oracle_hom_rank(Family family, int m, int n, const Rational& delta0);

RankReport hom_rank_report(Family family, int m, int n, const Rational& delta0);

// Dimension of the two-sided quotient triv (x)_{A_n} A_{n+a} (x)_{A_{n+a-m}}
// triv: on top of the right relations above (with A_{n+a-m} on the last
// n+a-m dots), the left-embedded A_n (on the last n dots, acting from the
// left) collapses against the trivial module as well.  Returns 0 when
// m > n + a.  Throws std::invalid_argument on negative arguments or an
// inadmissible delta0 at size n + a.
Integer oracle_two_blob_rank(Family family, int n, int a, int m,
                             const Rational& delta0);

RankReport two_blob_rank_report(Family family, int n, int a, int m,
                                const Rational& delta0);

// Matrix of the stabilization map two_blob_basis(n) -> two_blob_basis(n+1),
// rows indexed by the target basis and columns by the source, entries from
// the combinatorial rule (add one pure strand).
std::vector<std::vector<Rational>> phi_star_matrix(Family family, int n, int a,
                                                   int m);

// The same matrix from the quotient presentation at delta0: quotient classes
// are matched to basis elements through two_blob_project, and the abstract
// map appends one identity strand to a representative diagram before
// reducing again.  Throws std::logic_error if the classes and the basis fail
// to correspond; equality with phi_star_matrix is checked by tests and by
// measure_stability_degrees on small cells.
std::vector<std::vector<Rational>> phi_star_matrix_oracle(Family family, int n,
                                                          int a, int m,
                                                          const Rational& delta0);

constexpr int kNotObserved = -1;  // never held up to the horizon
constexpr int kNotMeasured = -2;  // the scan did not track this

// One source level of the stabilization map at fixed a: the map from level n
// to level n + 1.  `vacuous` flags cells where both spaces are empty; such a
// cell supports neither side and is noted rather than counted as evidence.
struct StabilityCell {
    int a = 0;
    int n = 0;
    Integer source_dim;
    Integer target_dim;
    bool injective = false;
    bool surjective = false;
    bool vacuous = false;
};

// Observed behaviour of a stabilization scan against the predicted bounds.
// Onsets are the least n from which the property holds through the end of
// the scan, kNotObserved / kNotMeasured otherwise.  `pass` is meaningful
// only when `conclusive` (the horizon reached the predicted bound).
struct StabilityReport {
    Family family = Family::TL;
    int m = 0;
    int n_max = 0;
    int a_max = -1;  // -1 for the multiplicity scan
    std::vector<StabilityCell> cells;
    std::map<int, MultiplicityTable> tables;
    int injectivity_onset = kNotMeasured;
    int surjectivity_onset = kNotMeasured;
    int stabilization_onset = kNotMeasured;
    int predicted_injectivity = kNotMeasured;
    int predicted_surjectivity = kNotMeasured;
    int predicted_stabilization = kNotMeasured;
    bool conclusive = false;
    bool pass = false;
    std::vector<std::string> notes;
};

// Scans the stabilization maps on two-blob bases for 0 <= a <= a_max and
// source levels 0 <= n < n_max, measuring injectivity and surjectivity of
// each cell three ways: image lookup, Bareiss rank of the combinatorial
// matrix, and (on cells small enough to enumerate) the quotient presentation
// at delta0.  Predicted onsets: injective always, surjective from m for
// TL/Br and from 2m for P.  Internal disagreement between the three paths
// throws std::logic_error; inadmissible delta0 at the largest size used
// throws std::invalid_argument.
StabilityReport measure_stability_degrees(Family family, int m, int a_max,
                                          int n_max, const Rational& delta0);

// Decomposes Hom(m, -) into simples for m <= n <= n_max and tests that the
// multiplicity tables, read in stable coordinates (stable_key), are constant
// from the predicted range stable_range(family, m, 0) on, recording the
// earliest onset actually observed.  Every table must obey the generation
// weight bound with g = m; a violation of the bound or a table change past
// the predicted range throws std::logic_error.  A horizon below the
// predicted range yields conclusive = false.
StabilityReport verify_multiplicity_stability(Family family, int m, int n_max);

}  // namespace dstab

#endif
