#include "superschur/commutant.hpp"

#include "superschur/config.hpp"
#include "superschur/linalg.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace superschur {

namespace {

// Unknown entries X[I,J] of a commutant candidate are supported on pairs of
// multi-indices that are rearrangements of each other: commuting with the
// diagonal derivations e_aa forces every other entry to zero, and content-
// matched pairs have equal parity, so evenness is automatic.
struct ContentBlocks {
    std::map<std::pair<long long, long long>, long long> unknown_of_pair;
    std::map<long long, std::vector<int>> content_of;  // index -> letter counts
    std::map<std::vector<int>, std::vector<long long>> classes;
    long long unknown_count = 0;

    ContentBlocks(const MultiIndexer& ix, SuperSpace space) {
        for (long long i = 0; i < ix.side(); ++i) {
            std::vector<int> content(static_cast<size_t>(space.dim()), 0);
            for (int k = 0; k < ix.degree(); ++k) content[static_cast<size_t>(ix.digit(i, k))]++;
            classes[content].push_back(i);
            content_of.emplace(i, std::move(content));
        }
        for (const auto& [content, members] : classes)
            for (long long r : members)
                for (long long c : members)
                    unknown_of_pair.emplace(std::make_pair(r, c), unknown_count++);
    }

    long long unknown(long long r, long long c) const {
        auto it = unknown_of_pair.find({r, c});
        return it == unknown_of_pair.end() ? -1 : it->second;
    }
};

// Koszul-signed Leibniz action of the elementary matrix e_ab on V^{tensor d}:
// on a basis tensor, sum over positions carrying letter b, replaced by a,
// with sign (-1)^(|e_ab| * parity of the preceding letters).
struct Derivation {
    std::vector<std::vector<std::pair<long long, int>>> columns; // col -> (row, sign)
    std::vector<std::vector<std::pair<long long, int>>> rows;    // row -> (col, sign)

    Derivation(const MultiIndexer& ix, SuperSpace space, int a, int b) {
        columns.resize(static_cast<size_t>(ix.side()));
        rows.resize(static_cast<size_t>(ix.side()));
        int gen_parity = space.parity(a) ^ space.parity(b);
        for (long long col = 0; col < ix.side(); ++col) {
            std::vector<int> digits = ix.digits(col);
            int prefix_parity = 0;
            for (int k = 0; k < ix.degree(); ++k) {
                int letter = digits[static_cast<size_t>(k)];
                if (letter == b) {
                    std::vector<int> image = digits;
                    image[static_cast<size_t>(k)] = a;
                    int sign = (gen_parity == 1 && prefix_parity == 1) ? -1 : 1;
                    long long row = ix.index(image);
                    columns[static_cast<size_t>(col)].emplace_back(row, sign);
                    rows[static_cast<size_t>(row)].emplace_back(col, sign);
                }
                prefix_parity ^= space.parity(letter);
            }
        }
    }
};

} // namespace

long long commutant_dim(SuperSpace space, int d) {
    if (d < 1) throw std::invalid_argument("commutant_dim: degree must be positive");
    require_commutant_dim(space.dim(), d);
    MultiIndexer ix(space.dim(), d);
    if (ix.side() == 0) return 0;
    ContentBlocks blocks(ix, space);

    SparseEchelon constraints;
    for (int a = 0; a < space.dim(); ++a) {
        for (int b = 0; b < space.dim(); ++b) {
            if (a == b) continue; // absorbed into the content-block structure
            Derivation der(ix, space, a, b);
            // Equations: entry (i,j) of X D - D X vanishes. Nontrivial ones
            // have content(i) = content(j) shifted by one b -> a.
            std::map<std::pair<long long, long long>, std::map<long long, Rational>> equations;
            for (long long j = 0; j < ix.side(); ++j)
                for (const auto& [k, sign] : der.columns[static_cast<size_t>(j)])
                    for (long long i : blocks.classes.at(blocks.content_of.at(k)))
                        equations[{i, j}][blocks.unknown(i, k)] += sign;
            for (long long i = 0; i < ix.side(); ++i)
                for (const auto& [k, sign] : der.rows[static_cast<size_t>(i)])
                    for (long long j : blocks.classes.at(blocks.content_of.at(k)))
                        equations[{i, j}][blocks.unknown(k, j)] -= sign;
            for (auto& [pos, eq] : equations) {
                SparseRow row;
                row.reserve(eq.size());
                for (auto& [u, coeff] : eq)
                    if (coeff != 0) row.emplace_back(u, coeff);
                if (!row.empty()) constraints.add_row(std::move(row));
            }
        }
    }
    return blocks.unknown_count - static_cast<long long>(constraints.rank());
}

namespace {

SparseRow vectorize(const SuperOperator& op, const ContentBlocks& blocks) {
    SparseRow row;
    for (long long r = 0; r < op.side(); ++r)
        for (const auto& [c, v] : op.row(r)) row.emplace_back(blocks.unknown(r, c), v);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
}

} // namespace

long long symmetry_span_dim(SuperSpace space, int d) {
    if (d < 1) throw std::invalid_argument("symmetry_span_dim: degree must be positive");
    require_commutant_dim(space.dim(), d);
    MultiIndexer ix(space.dim(), d);
    if (ix.side() == 0) return 0;
    ContentBlocks blocks(ix, space);
    SparseEchelon echelon;
    for (const Perm& sigma : all_perms(d)) echelon.add_row(vectorize(perm_operator(sigma, space), blocks));
    return static_cast<long long>(echelon.rank());
}

bool image_algebra_semisimple(SuperSpace space, int d) {
    if (d < 1) throw std::invalid_argument("image_algebra_semisimple: degree must be positive");
    require_commutant_dim(space.dim(), d);
    MultiIndexer ix(space.dim(), d);
    if (ix.side() == 0) return true; // the zero algebra has no radical
    ContentBlocks blocks(ix, space);

    // Basis of the image algebra from the symmetry operators.
    std::vector<SuperOperator> basis;
    SparseEchelon echelon;
    for (const Perm& sigma : all_perms(d)) {
        SuperOperator op = perm_operator(sigma, space);
        if (echelon.add_row(vectorize(op, blocks))) basis.push_back(std::move(op));
    }

    // Ordinary (ungraded) trace form on the basis.
    size_t n = basis.size();
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p; q < n; ++q) {
            SuperOperator prod = basis[p].compose(basis[q]);
            Rational tr(0);
            for (long long i = 0; i < prod.side(); ++i) {
                auto it = prod.row(i).find(i);
                if (it != prod.row(i).end()) tr += it->second;
            }
            gram[p][q] = tr;
            gram[q][p] = tr;
        }

    SparseEchelon gram_rank;
    for (size_t p = 0; p < n; ++p) {
        SparseRow row;
        for (size_t q = 0; q < n; ++q)
            if (gram[p][q] != 0) row.emplace_back(static_cast<long long>(q), gram[p][q]);
        gram_rank.add_row(std::move(row));
    }
    return gram_rank.rank() == n;
}

} // namespace superschur
