#include <cycdeg/marked_paths.hpp>

#include <cycdeg/combinatorics.hpp>

#include <algorithm>
#include <stdexcept>

namespace cycdeg {

namespace {

void check_range(int n, int r) {
    if (n < 3 || r < 0 || r > n - 3)
        throw std::invalid_argument("marked_paths: need n >= 3 and 0 <= r <= n-3");
}

void check_j(int n, int r, int j) {
    check_range(n, r);
    if (j < n - 1 - r || j > n - 1)
        throw std::invalid_argument("marked_paths: j out of range");
}

bool well_formed(const MarkedPath& p) {
    const int len = static_cast<int>(p.steps.size());
    if (p.marks.size() != p.assigned.size() || p.marks.empty()) return false;
    if (p.marks.front() != 0 || p.marks.back() != len) return false;
    for (size_t i = 1; i < p.marks.size(); ++i)
        if (p.marks[i] <= p.marks[i - 1]) return false;
    for (size_t i = 0; i < p.assigned.size(); ++i) {
        if (p.assigned[i] < 0) return false;
        bool interior = i > 0 && i + 1 < p.assigned.size();
        if (interior && p.assigned[i] == 0) return false;
    }
    // up-then-right within each segment
    for (size_t i = 1; i < p.marks.size(); ++i) {
        bool seen_right = false;
        for (int s = p.marks[i - 1]; s < p.marks[i]; ++s) {
            if (p.steps[s] == Step::Right) seen_right = true;
            else if (seen_right) return false;
        }
    }
    return true;
}

} // namespace

bool is_valid_marked_path(const MarkedPath& p, long long total) {
    if (!well_formed(p)) return false;
    long long sum = 0;
    for (long long a : p.assigned) sum += a;
    return sum == total;
}

std::pair<long long, long long> point_at(const MarkedPath& p, int index) {
    long long x = 0, y = 0;
    for (int s = 0; s < index; ++s) {
        if (p.steps[s] == Step::Right) ++x;
        else ++y;
    }
    return {x, y};
}

namespace {

// Walks every interleaving of r red steps (direction free) with n-r-1 blue
// rights and n-r-1 blue ups; `sink` sees each complete path once.
template <typename Sink>
void walk_colored(long long red, long long blue_right, long long blue_up, ColoredPath& cur, Sink&& sink) {
    if (red == 0 && blue_right == 0 && blue_up == 0) {
        sink(cur);
        return;
    }
    if (red > 0) {
        cur.push_back({Step::Up, Color::Red});
        walk_colored(red - 1, blue_right, blue_up, cur, sink);
        cur.back() = {Step::Right, Color::Red};
        walk_colored(red - 1, blue_right, blue_up, cur, sink);
        cur.pop_back();
    }
    if (blue_right > 0) {
        cur.push_back({Step::Right, Color::Blue});
        walk_colored(red, blue_right - 1, blue_up, cur, sink);
        cur.pop_back();
    }
    if (blue_up > 0) {
        cur.push_back({Step::Up, Color::Blue});
        walk_colored(red, blue_right, blue_up - 1, cur, sink);
        cur.pop_back();
    }
}

} // namespace

BigInt count_two_colored(int n, int r) {
    check_range(n, r);
    BigInt acc(0);
    ColoredPath cur;
    walk_colored(r, n - r - 1, n - r - 1, cur, [&acc](const ColoredPath&) { acc += BigInt(1); });
    return acc;
}

std::vector<ColoredPath> two_colored_paths(int n, int r) {
    check_range(n, r);
    std::vector<ColoredPath> out;
    ColoredPath cur;
    walk_colored(r, n - r - 1, n - r - 1, cur, [&out](const ColoredPath& p) { out.push_back(p); });
    return out;
}

BigInt two_colored_lhs(int n, int r) {
    check_range(n, r);
    BigInt sum(0);
    for (int j = n - 1 - r; j <= n - 1; ++j)
        sum += binomial(2 * n - 2 - r, j) * binomial(j, n - 1 - r) * binomial(2 * n - 2 - r - j, n - 1 - r);
    return sum;
}

BigInt two_colored_rhs(int n, int r) {
    check_range(n, r);
    BigInt num = factorial(2 * n - 2 - r) * BigInt::two_pow(static_cast<unsigned>(r));
    BigInt den = factorial(n - r - 1) * factorial(n - r - 1) * factorial(r);
    return divexact(num, den);
}

namespace {

// All monotone step sequences from (0,0) to (x,y); below_diagonal restricts
// to paths with y <= x at every lattice point.
void monotone_paths(long long x, long long y, bool below_diagonal,
                    std::vector<Step>& cur, std::vector<std::vector<Step>>& out,
                    long long cx, long long cy) {
    if (cx == x && cy == y) {
        out.push_back(cur);
        return;
    }
    if (cx < x) {
        cur.push_back(Step::Right);
        monotone_paths(x, y, below_diagonal, cur, out, cx + 1, cy);
        cur.pop_back();
    }
    if (cy < y && (!below_diagonal || cy + 1 <= cx)) {
        cur.push_back(Step::Up);
        monotone_paths(x, y, below_diagonal, cur, out, cx, cy + 1);
        cur.pop_back();
    }
}

// Compositions of total into `parts` non-negative summands, interior ones positive.
void assignments(long long total, size_t parts, size_t pos, std::vector<long long>& cur,
                 std::vector<std::vector<long long>>& out) {
    if (pos + 1 == parts) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    bool interior = pos > 0;
    // interior marks after this one still need at least 1 each
    long long reserve = static_cast<long long>(parts) - static_cast<long long>(pos) - 2;
    if (reserve < 0) reserve = 0;
    for (long long v = interior ? 1 : 0; v <= total - reserve; ++v) {
        cur[pos] = v;
        assignments(total - v, parts, pos + 1, cur, out);
    }
}

void emit_marked(const std::vector<Step>& steps, long long total, std::vector<MarkedPath>& out) {
    const int len = static_cast<int>(steps.size());
    if (len == 0) {
        // single point, single mark carrying the whole total
        out.push_back(MarkedPath{{}, {0}, {total}});
        return;
    }
    // mark positions forced by a right step followed by an up step
    std::vector<int> optional;
    std::vector<int> forced;
    for (int t = 1; t < len; ++t) {
        if (steps[t - 1] == Step::Right && steps[t] == Step::Up) forced.push_back(t);
        else optional.push_back(t);
    }
    const size_t opt = optional.size();
    for (size_t mask = 0; mask < (size_t{1} << opt); ++mask) {
        std::vector<int> marks{0};
        size_t fi = 0, oi = 0;
        for (int t = 1; t < len; ++t) {
            if (fi < forced.size() && forced[fi] == t) {
                marks.push_back(t);
                ++fi;
            } else {
                if (mask & (size_t{1} << oi)) marks.push_back(t);
                ++oi;
            }
        }
        marks.push_back(len);
        const size_t parts = marks.size();
        std::vector<std::vector<long long>> dists;
        std::vector<long long> cur(parts, 0);
        assignments(total, parts, 0, cur, dists);
        for (auto& d : dists) out.push_back(MarkedPath{steps, marks, d});
    }
}

} // namespace

std::vector<MarkedPath> enumerate_P(int n, int r, int j) {
    check_j(n, r, j);
    const long long total = n - 1 - r;
    const long long cap = std::min<long long>(n - 1 - j, j - (n - 1 - r));
    std::vector<MarkedPath> out;
    for (long long b2 = 0; 2 * b2 <= r && b2 <= cap; ++b2) {
        long long b1 = r - b2;
        std::vector<std::vector<Step>> paths;
        std::vector<Step> cur;
        monotone_paths(b1, b2, /*below_diagonal=*/true, cur, paths, 0, 0);
        for (const auto& s : paths) emit_marked(s, total, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MarkedPath> enumerate_P_prime(int n, int r, int j) {
    check_j(n, r, j);
    const long long total = n - 1 - r;
    const long long x = r - n + 1 + j;
    const long long y = n - 1 - j;
    std::vector<MarkedPath> out;
    std::vector<std::vector<Step>> paths;
    std::vector<Step> cur;
    monotone_paths(x, y, /*below_diagonal=*/false, cur, paths, 0, 0);
    for (const auto& s : paths) emit_marked(s, total, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::string, std::string> path_to_sequences(const MarkedPath& p) {
    if (!well_formed(p)) throw std::invalid_argument("path_to_sequences: malformed marked path");
    std::string u, r;
    size_t mi = 0;
    const int len = static_cast<int>(p.steps.size());
    for (int t = 0; t <= len; ++t) {
        if (mi < p.marks.size() && p.marks[mi] == t) {
            u.append(static_cast<size_t>(p.assigned[mi]), '0');
            r.append(static_cast<size_t>(p.assigned[mi]), '0');
            ++mi;
        }
        if (t < len) {
            if (p.steps[t] == Step::Up) u.push_back('1');
            else r.push_back('1');
        }
    }
    return {u, r};
}

namespace {

// gaps[i] = number of ones between zero i and zero i+1 (before the first /
// after the last at the ends); one more gap than zeros
std::vector<long long> gap_lengths(const std::string& s) {
    std::vector<long long> gaps{0};
    for (char c : s) {
        if (c == '1') ++gaps.back();
        else if (c == '0') gaps.push_back(0);
        else throw std::invalid_argument("sequences_to_path: expected a binary string");
    }
    return gaps;
}

} // namespace

MarkedPath sequences_to_path(const std::string& u, const std::string& r) {
    std::vector<long long> gu = gap_lengths(u);
    std::vector<long long> gr = gap_lengths(r);
    if (gu.size() != gr.size())
        throw std::invalid_argument("sequences_to_path: sequences disagree on the number of zeros");

    MarkedPath p;
    p.marks = {0};
    p.assigned = {0};
    const size_t zeros = gu.size() - 1;
    for (size_t i = 0; i < zeros; ++i) {
        if (gu[i] == 0 && gr[i] == 0) {
            ++p.assigned.back();
        } else {
            p.steps.insert(p.steps.end(), static_cast<size_t>(gu[i]), Step::Up);
            p.steps.insert(p.steps.end(), static_cast<size_t>(gr[i]), Step::Right);
            p.marks.push_back(static_cast<int>(p.steps.size()));
            p.assigned.push_back(1);
        }
    }
    // trailing segment: the endpoint mark carries no zeros of its own
    if (gu.back() != 0 || gr.back() != 0) {
        p.steps.insert(p.steps.end(), static_cast<size_t>(gu.back()), Step::Up);
        p.steps.insert(p.steps.end(), static_cast<size_t>(gr.back()), Step::Right);
        p.marks.push_back(static_cast<int>(p.steps.size()));
        p.assigned.push_back(0);
    }
    return p;
}

namespace {

std::vector<long long> excesses(const std::vector<Step>& steps) {
    std::vector<long long> e(steps.size() + 1, 0);
    long long x = 0, y = 0;
    for (size_t t = 0; t < steps.size(); ++t) {
        if (steps[t] == Step::Right) ++x;
        else ++y;
        e[t + 1] = y - x;
    }
    return e;
}

} // namespace

MarkedPath reflect_to_P(const MarkedPath& p) {
    MarkedPath q = p;
    for (;;) {
        std::vector<long long> e = excesses(q.steps);
        long long a = *std::max_element(e.begin(), e.end());
        if (a <= 0) return q;
        size_t idx = static_cast<size_t>(std::find(e.begin(), e.end(), a) - e.begin());
        if (idx == 0 || q.steps[idx - 1] != Step::Up)
            throw std::logic_error("reflect_to_P: arrival step is not an up step");
        q.steps[idx - 1] = Step::Right;
    }
}

MarkedPath reflect_to_P_prime(const MarkedPath& p, long long target_y) {
    MarkedPath q = p;
    for (long long level = 0;; ++level) {
        std::vector<long long> e = excesses(q.steps);
        long long y = 0;
        for (Step s : q.steps)
            if (s == Step::Up) ++y;
        if (y == target_y) return q;
        if (y > target_y) throw std::invalid_argument("reflect_to_P_prime: endpoint above target");
        size_t idx = e.size();
        for (size_t t = e.size(); t-- > 0;) {
            if (e[t] == level) {
                idx = t;
                break;
            }
        }
        if (idx >= q.steps.size() || q.steps[idx] != Step::Right)
            throw std::logic_error("reflect_to_P_prime: departure step is not a right step");
        q.steps[idx] = Step::Up;
    }
}

} // namespace cycdeg
