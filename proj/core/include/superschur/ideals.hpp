#pragma once

#include "superschur/group_algebra.hpp"
#include "superschur/super_operator.hpp"

#include <set>
#include <string>
#include <vector>

namespace superschur {

/// Truncated tensor ideal of the free rigid category on a rank-r object,
/// encoded blockwise: killed[d] is the set of partitions of d whose isotypic
/// block lies in the ideal, for 1 <= d <= max_degree. The degree-0 block
/// (the unit) is killed only by the improper full ideal.
struct IdealSequence {
    int rank = 0;
    int max_degree = 0;
    bool unit_killed = false;
    std::vector<std::set<Partition>> killed; // index 0 unused; 1..max_degree

    IdealSequence(int r, int degree)
        : rank(r), max_degree(degree), killed(static_cast<size_t>(degree) + 1) {}

    bool is_killed(int d, const Partition& lambda) const {
        return killed[static_cast<size_t>(d)].count(lambda) > 0;
    }
    bool operator==(const IdealSequence&) const = default;
};

/// Which orientation of the vanishing rectangle the evaluation functor
/// realizes, relative to the convention "m+1 columns and n+1 rows".
enum class RectangleOrientation { as_stated, transposed };

/// Oracle scan (d <= 4, m+n <= 2) comparing kernel membership of the
/// symmetrizers against both rectangle orientations. The library pins the
/// result of this scan as realized_rectangle; the test suite asserts they
/// agree.
RectangleOrientation detect_rectangle_orientation();

/// The truncation of J_{m|n}: killed_d = partitions of d containing the
/// pinned rectangle.
IdealSequence jmn_sequence(int m, int n, int max_degree);

/// True iff the element evaluates to zero on k^{m|n}.
bool member_by_eval(const GroupAlgebraElement& x, int m, int n);

struct ClosureReport {
    bool induction_ok = false;
    bool contraction_ok = false;
};

/// Checks both tensor-ideal axioms on the truncated data: the add-a-box
/// induction closure combinatorially, and contraction closure by contracting
/// a spanning set of each killed block at loop parameter t = rank and
/// testing isotypic support containment one degree down.
ClosureReport check_closure(const IdealSequence& seq);

/// Truncated primality: products of surviving block representatives on
/// disjoint strands must not land in the ideal. Representatives are the
/// symmetrizers plus a few seeded random two-sided multiples.
bool is_prime(const IdealSequence& seq);

struct ClassifiedSequence {
    IdealSequence seq;
    std::string label; // "zero", "J_{m|n}", "full", or "other"
};

/// All closure-satisfying prime truncated sequences of the given rank up to
/// max_degree, by pruned exhaustive search over per-degree partition sets.
/// Deterministic canonical order (by unit bit, then killed data).
std::vector<ClassifiedSequence> enumerate_prime_sequences(int rank, int max_degree);

} // namespace superschur
