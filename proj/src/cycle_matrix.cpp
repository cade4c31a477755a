#include <cycdeg/cycle_matrix.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycdeg {

namespace {

void check_cycle_matrix(const CycleMatrix& m) {
    if (m.n < 3) throw std::invalid_argument("CycleMatrix: n must be at least 3");
    if (static_cast<int>(m.a.size()) != m.n || static_cast<int>(m.b.size()) != m.n)
        throw std::invalid_argument("CycleMatrix: vectors must have length n");
}

} // namespace

RatMatrix CycleMatrix::expand() const {
    check_cycle_matrix(*this);
    RatMatrix out(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) out[i][i] = a[i];
    for (int e = 0; e < n; ++e) {
        int i = e, j = (e + 1) % n;
        out[i][j] = b[e];
        out[j][i] = b[e];
    }
    return out;
}

std::vector<int> zero_set(const CycleMatrix& m) {
    check_cycle_matrix(m);
    std::vector<int> z;
    for (int e = 1; e <= m.n; ++e)
        if (m.b[e - 1].is_zero()) z.push_back(e);
    return z;
}

std::vector<int> BlockDecomposition::sizes() const {
    std::vector<int> s;
    s.reserve(blocks.size());
    for (const auto& blk : blocks) s.push_back(static_cast<int>(blk.size()));
    return s;
}

BlockDecomposition decompose(const CycleMatrix& m) {
    std::vector<int> z = zero_set(m);
    if (z.empty()) throw std::domain_error("decompose: matrix is not in cyclic-block form");
    BlockDecomposition d;
    d.zeros = z;
    const int k = static_cast<int>(z.size());
    for (int t = 0; t < k; ++t) {
        int lo = z[t] + 1;
        int hi = t + 1 < k ? z[t + 1] : z[0] + m.n;
        std::vector<int> idx;
        for (int v = lo; v <= hi; ++v) idx.push_back((v - 1) % m.n + 1);
        d.blocks.push_back(std::move(idx));
    }
    return d;
}

RatMatrix block_submatrix(const CycleMatrix& m, const std::vector<int>& indices) {
    RatMatrix full = m.expand();
    RatMatrix sub(indices.size(), std::vector<Rat>(indices.size(), Rat(0)));
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = 0; j < indices.size(); ++j)
            sub[i][j] = full[indices[i] - 1][indices[j] - 1];
    return sub;
}

BlockRankReport check_block_rank(const CycleMatrix& m) {
    BlockDecomposition d = decompose(m);
    BlockRankReport report;
    report.sizes = d.sizes();
    report.matrix_rank = rank_exact(m.expand());
    int sum = 0;
    bool ok = true;
    for (const auto& blk : d.blocks) {
        int rk = rank_exact(block_submatrix(m, blk));
        report.ranks.push_back(rk);
        int t = static_cast<int>(blk.size());
        if (rk != t && rk != t - 1) ok = false;
        sum += rk;
    }
    report.ranks_consistent = ok && sum == report.matrix_rank;
    return report;
}

CycleMatrix apply(const Dihedral& s, const CycleMatrix& m) {
    check_cycle_matrix(m);
    const int n = m.n;
    CycleMatrix mid = m;
    if (s.reflect) {
        // v -> n+1-v: a'_{n+1-i} = a_i, edge e -> n-e (edge n fixed)
        for (int i = 1; i <= n; ++i) mid.a[n - i] = m.a[i - 1];
        for (int e = 1; e <= n - 1; ++e) mid.b[n - e - 1] = m.b[e - 1];
        mid.b[n - 1] = m.b[n - 1];
    }
    CycleMatrix out = mid;
    int rot = (s.rotation % n + n) % n;
    for (int i = 0; i < n; ++i) {
        out.a[(i + rot) % n] = mid.a[i];
        out.b[(i + rot) % n] = mid.b[i];
    }
    return out;
}

namespace {

// spans between chosen zeros z_1 < ... < z_k = n: block i is (z_{i-1}, z_i]
std::vector<std::vector<int>> spans_from_chosen(const std::vector<int>& chosen) {
    std::vector<std::vector<int>> spans;
    int prev = 0;
    for (int z : chosen) {
        std::vector<int> idx;
        for (int v = prev + 1; v <= z; ++v) idx.push_back(v);
        spans.push_back(std::move(idx));
        prev = z;
    }
    return spans;
}

} // namespace

BlockFormResult normalize_block_form(const CycleMatrix& m) {
    check_cycle_matrix(m);
    const int n = m.n;
    const int rank = rank_exact(m.expand());
    if (rank == n) throw std::domain_error("normalize_block_form: matrix is regular");
    std::vector<int> z = zero_set(m);
    if (z.empty()) throw std::domain_error("normalize_block_form: matrix is not in cyclic-block form");

    BlockFormResult result;
    result.sigma = Dihedral{(n - z.back()) % n, false};
    CycleMatrix rotatedm = apply(result.sigma, m);

    std::vector<int> chosen = zero_set(rotatedm); // contains n by construction
    for (;;) {
        auto spans = spans_from_chosen(chosen);
        const int k = static_cast<int>(spans.size());
        std::vector<int> ranks(k);
        int full = -1;
        for (int j = k - 1; j >= 1; --j) {
            ranks[j] = rank_exact(block_submatrix(rotatedm, spans[j]));
            if (ranks[j] == static_cast<int>(spans[j].size())) {
                full = j;
                break;
            }
        }
        if (full >= 1) {
            // merge block j into block j-1 by dropping the zero between them
            chosen.erase(chosen.begin() + (full - 1));
            continue;
        }
        ranks[0] = rank_exact(block_submatrix(rotatedm, spans[0]));
        if (ranks[0] == static_cast<int>(spans[0].size())) {
            if (k == 1) throw std::logic_error("normalize_block_form: single full-rank block on a singular matrix");
            chosen.erase(chosen.begin()); // merge B_1 into B_2
            continue;
        }
        for (const auto& span : spans) result.type.push_back(static_cast<int>(span.size()));
        return result;
    }
}

namespace {

RatMatrix drop_two_columns(const RatMatrix& basis, int ci, int cj) {
    RatMatrix out;
    out.reserve(basis.size());
    for (const auto& row : basis) {
        std::vector<Rat> r;
        r.reserve(row.size() - 2);
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            if (c != ci && c != cj) r.push_back(row[c]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

CycleMatrix reconstruct_from_image(const RatMatrix& basis_rows) {
    if (basis_rows.empty()) throw std::invalid_argument("reconstruct_from_image: empty basis");
    const int n = static_cast<int>(basis_rows.front().size());
    if (n < 3 || static_cast<int>(basis_rows.size()) != n - 2)
        throw std::invalid_argument("reconstruct_from_image: expected n-2 rows of length n");
    if (rank_exact(basis_rows) != n - 2)
        throw std::invalid_argument("reconstruct_from_image: rows do not form a basis");

    // no nonzero member of U may have support inside any coordinate pair
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rank_exact(drop_two_columns(basis_rows, i, j)) != n - 2)
                throw DegenerateSubspace("reconstruct_from_image: subspace meets a coordinate plane");

    // two defining functionals of U
    std::vector<std::vector<Rat>> perp = nullspace(basis_rows);
    if (perp.size() != 2) throw std::logic_error("reconstruct_from_image: orthogonal complement is not 2-dimensional");

    RatMatrix rows(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 1; i <= n; ++i) {
        const int prev = i == 1 ? n : i - 1;
        const int next = i == n ? 1 : i + 1;
        const int support[3] = {prev, i, next};

        RatMatrix sys(2, std::vector<Rat>(3, Rat(0)));
        for (int rr = 0; rr < 2; ++rr)
            for (int c = 0; c < 3; ++c) sys[rr][c] = perp[rr][support[c] - 1];
        auto kernel = nullspace(sys);
        if (kernel.size() != 1)
            throw std::logic_error("reconstruct_from_image: row system is not 1-dimensional");
        const auto& v = kernel.front();

        // a pivot can only vanish when U meets a coordinate plane, which the
        // pair check above already excludes
        Rat scale;
        if (i == 1) {
            if (v[1].is_zero()) throw DegenerateSubspace("reconstruct_from_image: vanishing diagonal pivot");
            scale = Rat(1) / v[1];
        } else {
            // match the symmetric entry fixed by the previous row
            if (v[0].is_zero()) throw DegenerateSubspace("reconstruct_from_image: vanishing coupling pivot");
            scale = rows[i - 2][i - 1] / v[0];
        }
        for (int c = 0; c < 3; ++c) rows[i - 1][support[c] - 1] = v[c] * scale;
    }

    if (rows[n - 1][0] != rows[0][n - 1])
        throw std::logic_error("reconstruct_from_image: wrap entries disagree");

    CycleMatrix out;
    out.n = n;
    out.a.resize(n);
    out.b.resize(n);
    for (int i = 1; i <= n; ++i) out.a[i - 1] = rows[i - 1][i - 1];
    for (int e = 1; e <= n - 1; ++e) out.b[e - 1] = rows[e - 1][e];
    out.b[n - 1] = rows[n - 1][0];

    if (rank_exact(out.expand()) != n - 2)
        throw std::logic_error("reconstruct_from_image: output rank is not n-2");
    return out;
}

Rat random_rat(Rng& rng) {
    return Rat(rng.in_range(-20, 20), rng.in_range(1, 9));
}

Rat random_nonzero_rat(Rng& rng) {
    for (;;) {
        Rat r = random_rat(rng);
        if (!r.is_zero()) return r;
    }
}

namespace {

CycleMatrix random_matrix_with_zeros(int n, Rng& rng, const std::vector<int>& zero_edges) {
    CycleMatrix m;
    m.n = n;
    m.a.resize(n);
    m.b.resize(n);
    std::vector<char> is_zero(n + 1, 0);
    for (int e : zero_edges) is_zero[e] = 1;
    for (int i = 0; i < n; ++i) m.a[i] = random_rat(rng);
    for (int e = 1; e <= n; ++e) m.b[e - 1] = is_zero[e] ? Rat(0) : random_nonzero_rat(rng);
    return m;
}

std::vector<int> random_edge_subset(int n, int count, Rng& rng) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(all[i], all[rng.below(static_cast<uint64_t>(i + 1))]);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

// leading principal minors of the tridiagonal block: D_t = a_t D_{t-1} - b_{t-1}^2 D_{t-2}
Rat tridiag_det(const std::vector<Rat>& diag, const std::vector<Rat>& off, size_t upto) {
    Rat d2(1), d1(0);
    if (upto == 0) return Rat(1);
    d1 = diag[0];
    for (size_t t = 1; t < upto; ++t) {
        Rat d = diag[t] * d1 - off[t - 1] * off[t - 1] * d2;
        d2 = d1;
        d1 = d;
    }
    return d1;
}

// Forces the block spanned by `idx` to rank |idx|-1 by solving the last
// diagonal entry from the determinant recurrence.
bool make_block_deficient(CycleMatrix& m, const std::vector<int>& idx, Rng& rng) {
    const size_t t = idx.size();
    if (t == 1) {
        m.a[idx[0] - 1] = Rat(0);
        return true;
    }
    std::vector<Rat> diag(t), off(t - 1);
    for (size_t p = 0; p < t; ++p) diag[p] = m.a[idx[p] - 1];
    for (size_t p = 0; p + 1 < t; ++p) off[p] = m.b[idx[p] - 1];
    Rat d_prev = tridiag_det(diag, off, t - 1);
    if (d_prev.is_zero()) {
        // redraw the interior diagonal until the leading minor is regular
        for (int attempt = 0; attempt < 32 && d_prev.is_zero(); ++attempt) {
            for (size_t p = 0; p + 1 < t; ++p) {
                diag[p] = random_rat(rng);
                m.a[idx[p] - 1] = diag[p];
            }
            d_prev = tridiag_det(diag, off, t - 1);
        }
        if (d_prev.is_zero()) return false;
    }
    Rat d_prev2 = tridiag_det(diag, off, t - 2);
    m.a[idx[t - 1] - 1] = off[t - 2] * off[t - 2] * d_prev2 / d_prev;
    return true;
}

} // namespace

SweepReport sweep_block_rank(int n, int samples, uint64_t seed) {
    SweepReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Rng rng(seed, static_cast<uint64_t>(s));
        int zeros = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        CycleMatrix m = random_matrix_with_zeros(n, rng, random_edge_subset(n, zeros, rng));
        BlockRankReport r = check_block_rank(m);
        if (!r.ranks_consistent) {
            ++report.failures;
            report.failing.push_back("sample " + std::to_string(s));
        }
    }
    return report;
}

SweepReport sweep_lowrank_contrapositive(int n, int samples, uint64_t seed) {
    SweepReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Rng rng(seed, static_cast<uint64_t>(s));
        CycleMatrix m = random_matrix_with_zeros(n, rng, {});
        if (rank_exact(m.expand()) < n - 2) {
            ++report.failures;
            report.failing.push_back("sample " + std::to_string(s));
        }
    }
    return report;
}

SweepReport sweep_normalize_block_form(int n, int samples, uint64_t seed) {
    SweepReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Rng rng(seed, static_cast<uint64_t>(s));

        CycleMatrix m;
        int rank = n;
        for (;;) {
            int zeros = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
            m = random_matrix_with_zeros(n, rng, random_edge_subset(n, zeros, rng));
            BlockDecomposition d = decompose(m);
            int deficient = 1 + static_cast<int>(rng.below(d.blocks.size()));
            bool ok = true;
            for (int t = 0; t < deficient && ok; ++t) ok = make_block_deficient(m, d.blocks[t], rng);
            if (!ok) continue;
            rank = rank_exact(m.expand());
            if (rank < n) break;
        }

        bool pass = true;
        std::string why;
        try {
            BlockFormResult res = normalize_block_form(m);
            CycleMatrix moved = apply(res.sigma, m);
            int total = 0;
            int boundary = 0;
            for (int t : res.type) {
                std::vector<int> idx;
                for (int v = boundary + 1; v <= boundary + t; ++v) idx.push_back(v);
                int rk = rank_exact(block_submatrix(moved, idx));
                if (rk != t - 1) {
                    pass = false;
                    why = "block rank is not t-1";
                }
                boundary += t;
                total += t;
            }
            if (total != n) {
                pass = false;
                why = "type does not sum to n";
            }
            if (!moved.b[n - 1].is_zero()) {
                pass = false;
                why = "b_n not cleared";
            }
            if (rank <= n - 3 && static_cast<int>(res.type.size()) != n - rank) {
                pass = false;
                why = "block count is not n - rank";
            }
        } catch (const std::exception& e) {
            pass = false;
            why = e.what();
        }
        if (!pass) {
            ++report.failures;
            report.failing.push_back("sample " + std::to_string(s) + ": " + why);
        }
    }
    return report;
}

SweepReport sweep_reconstruct(int n, int samples, uint64_t seed) {
    SweepReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Rng rng(seed, static_cast<uint64_t>(s));

        RatMatrix basis;
        for (;;) {
            basis.assign(n - 2, std::vector<Rat>(n, Rat(0)));
            for (auto& row : basis)
                for (auto& v : row) v = random_rat(rng);
            if (rank_exact(basis) != n - 2) continue;
            bool degenerate = false;
            try {
                CycleMatrix a = reconstruct_from_image(basis);

                bool pass = true;
                std::string why;
                RatMatrix full = a.expand();
                if (!(a.b[n - 1] == full[0][n - 1])) {
                    pass = false;
                    why = "wrap symmetry";
                }
                // every row must satisfy both defining functionals of U;
                // through the corner entries this also pins a_{1n} = a_{n1}
                for (const auto& functional : nullspace(basis)) {
                    for (const auto& row : full) {
                        Rat dot(0);
                        for (int c = 0; c < n; ++c) dot += row[c] * functional[c];
                        if (!dot.is_zero()) {
                            pass = false;
                            why = "row outside U";
                        }
                    }
                }
                if (rank_exact(full) != n - 2) {
                    pass = false;
                    why = "rank";
                }
                RatMatrix stacked = basis;
                for (const auto& row : full) stacked.push_back(row);
                if (rank_exact(stacked) != n - 2) {
                    pass = false;
                    why = "image differs from U";
                }
                if (!pass) {
                    ++report.failures;
                    report.failing.push_back("sample " + std::to_string(s) + ": " + why);
                }
            } catch (const DegenerateSubspace&) {
                degenerate = true;
            } catch (const std::exception& e) {
                ++report.failures;
                report.failing.push_back("sample " + std::to_string(s) + ": " + std::string(e.what()));
            }
            if (!degenerate) break;
        }
    }
    return report;
}

} // namespace cycdeg
