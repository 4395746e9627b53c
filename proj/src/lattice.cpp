#include "cremona/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace cremona {

namespace {

using QMat = std::vector<QVec>;

// Solves sum_k x_k rows[k] = target; nullopt when target is not in the row span.
std::optional<QVec> solve_rows(const QMat& rows, const QVec& target) {
    const std::size_t k = rows.size(), n = target.size();
    // Augmented system with one equation per coordinate.
    QMat m(n, QVec(k + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[j][i] = rows[i][j];
        m[j][k] = target[j];
    }
    std::vector<int> pivot_of(k, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && m[p][c] == Q(0)) ++p;
        if (p == n) continue;
        std::swap(m[p], m[r]);
        const Q s = m[r][c];
        for (auto& e : m[r]) e /= s;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == Q(0)) continue;
            const Q f = m[i][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (m[i][k] != Q(0)) return std::nullopt;
    QVec x(k, Q(0));
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_of[c] >= 0) x[c] = m[pivot_of[c]][k];
    return x;
}

Q det_q(QMat m) {
    const std::size_t n = m.size();
    Q d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == Q(0)) ++p;
        if (p == n) return Q(0);
        if (p != c) std::swap(m[p], m[c]), d = -d;
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Q f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

IntVec to_int(const QVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != std::int64_t{1}) throw Error(ErrorKind::InvalidArgument, "class is not integral");
        out[i] = v[i].numerator();
    }
    return out;
}

// Z-basis of {v : A v = 0} by unimodular column operations.
IntMat integer_kernel(const IntMat& A, std::size_t n) {
    IntMat M = A;
    IntMat U(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t f) {
        for (auto& row : M) row[dst] -= f * row[src];
        for (auto& row : U) row[dst] -= f * row[src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& row : M) std::swap(row[a], row[b]);
        for (auto& row : U) std::swap(row[a], row[b]);
    };
    std::size_t pc = 0;
    for (std::size_t r = 0; r < M.size() && pc < n; ++r) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = pc; c < n; ++c)
                if (M[r][c] != 0 && (best == n || std::llabs(M[r][c]) < std::llabs(M[r][best]))) best = c;
            if (best == n) break;
            col_swap(pc, best);
            bool done = true;
            for (std::size_t c = pc + 1; c < n; ++c) {
                if (M[r][c] == 0) continue;
                col_op(c, pc, M[r][c] / M[r][pc]);
                if (M[r][c] != 0) done = false;
            }
            if (done) {
                ++pc;
                break;
            }
        }
    }
    IntMat out;
    for (std::size_t c = pc; c < n; ++c) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = U[i][c];
        out.push_back(v);
    }
    return out;
}

bool vec_less_desc(const IntVec& a, const IntVec& b) { return a > b; }

// Calls visit(m) for every integer vector m with sum d_i m_i^2 = norm, sum d_i m_i = lin and
// delta | d_i m_i.
void enumerate_m(const std::vector<int>& d, std::int64_t delta, std::int64_t norm, std::int64_t lin,
                 const std::function<void(const IntVec&)>& visit) {
    IntVec m(d.size());
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rn,
                                                                           std::int64_t rl) {
        if (i == d.size()) {
            if (rn == 0 && rl == 0) visit(m);
            return;
        }
        // Cauchy–Schwarz on the remaining coordinates prunes dead branches.
        std::int64_t rest = 0;
        for (std::size_t j = i; j < d.size(); ++j) rest += d[j];
        if (rl * rl > rest * rn) return;
        const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rn) / d[i])) + 1;
        for (std::int64_t v = -bound; v <= bound; ++v) {
            const std::int64_t q = d[i] * v * v;
            if (q > rn) continue;
            if ((d[i] * v) % delta != 0) continue;
            m[i] = v;
            rec(i + 1, rn - q, rl - d[i] * v);
        }
    };
    rec(0, norm, lin);
}

std::int64_t degree_sum(const Lattice& L) {
    return std::accumulate(L.degrees.begin(), L.degrees.end(), std::int64_t{0});
}

}  // namespace

std::int64_t Lattice::dot(const IntVec& a, const IntVec& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

Q Lattice::dot(const QVec& a, const IntVec& b) const {
    Q s(0);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        std::int64_t row = 0;
        for (std::size_t j = 0; j < gram.size(); ++j) row += gram[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

Q Lattice::dot(const QVec& a, const QVec& b) const {
    Q s(0);
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

IntVec Lattice::to_standard(const IntVec& v) const {
    IntVec s(basis.empty() ? 0 : basis[0].size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += v[k] * basis[k][j];
    return s;
}

IntVec Lattice::from_standard(const IntVec& s) const {
    QMat rows;
    for (const auto& b : basis) rows.push_back(to_q(b));
    auto x = solve_rows(rows, to_q(s));
    if (!x) throw Error(ErrorKind::InvalidArgument, "class does not lie in the lattice");
    return to_int(*x);
}

QVec to_q(const IntVec& v) {
    QVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

Lattice blowup_lattice(const std::vector<int>& degrees, const std::vector<int>& nesting) {
    const std::size_t r = degrees.size();
    for (int d : degrees)
        if (d < 1) throw Error(ErrorKind::InvalidArgument, "orbit degrees must be positive");
    std::vector<int> parent = nesting.empty() ? std::vector<int>(r, -1) : nesting;
    if (parent.size() != r) throw Error(ErrorKind::BadNesting, "nesting has the wrong length");
    for (std::size_t i = 0; i < r; ++i) {
        const int p = parent[i];
        if (p == -1) continue;
        if (p < 0 || static_cast<std::size_t>(p) >= r || static_cast<std::size_t>(p) == i)
            throw Error(ErrorKind::BadNesting, "invalid parent index");
        if (degrees[p] != degrees[i]) throw Error(ErrorKind::BadNesting, "nested orbit has a different degree");
        // Walk up; a cycle never reaches a root.
        std::size_t steps = 0;
        for (int q = p; q != -1; q = parent[q])
            if (++steps > r) throw Error(ErrorKind::BadNesting, "nesting has a cycle");
    }
    Lattice L;
    L.degrees = degrees;
    L.parent = parent;
    L.labels.push_back("H");
    for (std::size_t i = 0; i < r; ++i) L.labels.push_back("E" + std::to_string(i + 1));
    L.gram.assign(r + 1, IntVec(r + 1, 0));
    L.gram[0][0] = 1;
    for (std::size_t i = 0; i < r; ++i) L.gram[i + 1][i + 1] = -degrees[i];
    L.K.assign(r + 1, 1);
    L.K[0] = -3;
    L.basis.assign(r + 1, IntVec(r + 1, 0));
    for (std::size_t i = 0; i <= r; ++i) L.basis[i][i] = 1;
    return L;
}

Lattice rebase(const Lattice& L, const IntMat& rows, std::vector<std::string> labels) {
    const std::size_t n = L.rank();
    if (rows.size() != n || labels.size() != n) throw Error(ErrorKind::InvalidArgument, "basis size mismatch");
    QMat q;
    for (const auto& r : rows) q.push_back(to_q(r));
    const Q d = det_q(q);
    if (d != Q(1) && d != Q(-1)) throw Error(ErrorKind::InvalidArgument, "change of basis is not unimodular");
    Lattice out = L;
    out.labels = std::move(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.gram[i][j] = L.dot(rows[i], rows[j]);
    out.basis.clear();
    for (const auto& r : rows) out.basis.push_back(L.to_standard(r));
    auto k = solve_rows(q, to_q(L.K));
    out.K = to_int(*k);
    return out;
}

Lattice example_3_8() {
    const Lattice Z = blowup_lattice({1, 1}, {-1, 0});
    // L' = H - E1 - E2, E = E1 - E2 (strict transform), E' = E2.
    return rebase(Z, {{1, -1, -1}, {0, 1, -1}, {0, 0, 1}}, {"L'", "E", "E'"});
}

std::vector<IntVec> nesting_curves(const Lattice& L) {
    std::vector<IntVec> out;
    const std::size_t r = L.degrees.size();
    for (std::size_t i = 0; i < r; ++i) {
        IntVec s(r + 1, 0);
        s[i + 1] = 1;
        bool has_child = false;
        for (std::size_t j = 0; j < r; ++j)
            if (L.parent[j] == static_cast<int>(i)) s[j + 1] -= 1, has_child = true;
        if (has_child) out.push_back(L.from_standard(s));
    }
    return out;
}

std::int64_t orbit_size(const Lattice& L, const IntVec& C) { return -L.self(C); }

std::vector<IntVec> negative_classes(const Lattice& L) {
    const std::int64_t N = degree_sum(L);
    if (N > 8) throw Error(ErrorKind::SearchBoundExceeded, "search is complete only for degree sums up to 8");
    const auto& d = L.degrees;
    std::int64_t period = 1;
    for (int x : d) period = std::lcm(period, static_cast<std::int64_t>(x));
    // H-degree of one geometric (-1)-curve: (9 - N) a^2 - 6a + 1 - N <= 0.
    const double disc = 9.0 - static_cast<double>((9 - N) * (1 - N));
    const auto amax = static_cast<std::int64_t>(std::floor((3.0 + std::sqrt(disc)) / static_cast<double>(9 - N)));

    struct Found {
        std::int64_t delta, a;
        IntVec s;
    };
    std::vector<Found> found;
    for (std::int64_t delta = 1; delta <= period; ++delta) {
        if (period % delta != 0) continue;
        for (std::int64_t ap = 0; ap <= amax; ++ap) {
            const std::int64_t a = delta * ap;
            // C = aH - sum m_i E_i: sum d_i m_i^2 = a^2 + delta, sum d_i m_i = 3a - delta.
            enumerate_m(d, delta, a * a + delta, 3 * a - delta, [&](const IntVec& m) {
                IntVec s(d.size() + 1);
                s[0] = a;
                for (std::size_t i = 0; i < d.size(); ++i) s[i + 1] = -m[i];
                found.push_back({delta, a, s});
            });
        }
    }
    std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        if (x.delta != y.delta) return x.delta < y.delta;
        if (x.a != y.a) return x.a < y.a;
        return vec_less_desc(x.s, y.s);
    });
    std::vector<IntVec> out;
    for (const auto& f : found) out.push_back(L.from_standard(f.s));
    return out;
}

std::vector<IntVec> conic_classes(const Lattice& L) {
    const std::int64_t N = degree_sum(L);
    if (N > 8) throw Error(ErrorKind::SearchBoundExceeded, "search is complete only for degree sums up to 8");
    // (9 - N) a^2 - 12 a + 4 <= 0.
    const double disc = 36.0 - 4.0 * static_cast<double>(9 - N);
    const auto amax = static_cast<std::int64_t>(std::floor((6.0 + std::sqrt(disc)) / static_cast<double>(9 - N)));
    std::vector<IntVec> found;
    for (std::int64_t a = 1; a <= amax; ++a)
        enumerate_m(L.degrees, 1, a * a, 3 * a - 2, [&](const IntVec& m) {
            IntVec s(m.size() + 1);
            s[0] = a;
            for (std::size_t i = 0; i < m.size(); ++i) s[i + 1] = -m[i];
            found.push_back(s);
        });
    std::sort(found.begin(), found.end(), [](const IntVec& x, const IntVec& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        return vec_less_desc(x, y);
    });
    std::vector<IntVec> out;
    for (const auto& s : found) out.push_back(L.from_standard(s));
    return out;
}

bool orthogonal_to(const Lattice& L, const IntVec& v, const std::vector<IntVec>& contracted) {
    return std::all_of(contracted.begin(), contracted.end(), [&](const IntVec& c) { return L.dot(v, c) == 0; });
}

QVec pushforward(const Lattice& L, const std::vector<IntVec>& contracted, const QVec& D) {
    QVec P = D;
    for (const auto& C : contracted) {
        const Q t = L.dot(D, C) / Q(orbit_size(L, C));
        for (std::size_t i = 0; i < P.size(); ++i) P[i] += t * C[i];
    }
    return P;
}

Lattice contract(const Lattice& L, const std::vector<IntVec>& contracted) {
    if (contracted.empty()) return L;
    const std::size_t n = L.rank();
    IntMat A;
    for (const auto& C : contracted) {
        IntVec row(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) row[j] += C[i] * L.gram[i][j];
        A.push_back(row);
    }
    const IntMat B = integer_kernel(A, n);
    Lattice Y;
    Y.degrees = L.degrees;
    Y.parent = L.parent;
    for (std::size_t k = 0; k < B.size(); ++k) Y.labels.push_back("y" + std::to_string(k + 1));
    Y.gram.assign(B.size(), IntVec(B.size(), 0));
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) Y.gram[i][j] = L.dot(B[i], B[j]);
    for (const auto& b : B) Y.basis.push_back(L.to_standard(b));
    IntVec KY = L.K;
    for (const auto& C : contracted)
        for (std::size_t i = 0; i < n; ++i) KY[i] -= C[i];
    QMat rows;
    for (const auto& b : B) rows.push_back(to_q(b));
    auto k = solve_rows(rows, to_q(KY));
    if (!k) throw Error(ErrorKind::InvalidArgument, "contracted classes are not orthogonal");
    Y.K = to_int(*k);
    return Y;
}

ChamberModel::ChamberModel(Lattice L)
    : L_(std::move(L)), neg_(negative_classes(L_)), rigid_(nesting_curves(L_)), conics_(conic_classes(L_)) {}

std::vector<IntVec> ChamberModel::classes(const std::vector<int>& I) const {
    std::vector<IntVec> out;
    for (int i : I) out.push_back(neg_[i]);
    return out;
}

SurfaceData ChamberModel::surface(const std::vector<int>& I) const {
    SurfaceData s;
    const auto cs = classes(I);
    s.rho = static_cast<std::int64_t>(L_.rank()) - static_cast<std::int64_t>(I.size());
    s.K2 = L_.self(L_.K);
    for (const auto& C : cs) s.K2 += orbit_size(L_, C);
    for (const auto& R : rigid_)
        if (orthogonal_to(L_, R, cs)) s.rigid.push_back(R);
    for (std::size_t i = 0; i < neg_.size(); ++i) {
        if (std::find(I.begin(), I.end(), static_cast<int>(i)) != I.end()) continue;
        if (!orthogonal_to(L_, neg_[i], cs)) continue;
        const bool irreducible =
            std::all_of(s.rigid.begin(), s.rigid.end(), [&](const IntVec& R) { return L_.dot(neg_[i], R) >= 0; });
        if (irreducible) s.negatives.push_back(static_cast<int>(i));
    }
    for (const auto& F : conics_) {
        if (!orthogonal_to(L_, F, cs)) continue;
        bool nef = std::all_of(s.rigid.begin(), s.rigid.end(), [&](const IntVec& R) { return L_.dot(F, R) >= 0; });
        for (int i : s.negatives) nef = nef && L_.dot(F, neg_[i]) >= 0;
        if (nef) s.conics.push_back(F);
    }
    return s;
}

std::vector<std::vector<int>> ChamberModel::contractible_sets() const {
    std::set<std::vector<int>> seen{{}};
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
        auto I = stack.back();
        stack.pop_back();
        for (int c : surface(I).negatives) {
            auto J = I;
            J.push_back(c);
            std::sort(J.begin(), J.end());
            if (seen.insert(J).second) stack.push_back(J);
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

IntVec ChamberModel::canonical_of(const std::vector<int>& I) const {
    IntVec K = L_.K;
    for (int i : I)
        for (std::size_t j = 0; j < K.size(); ++j) K[j] -= neg_[i][j];
    return K;
}

namespace {

bool ample_on_surface(const Lattice& L, const std::vector<IntVec>& neg, const SurfaceData& s, const QVec& A,
                      const IntVec& KY) {
    if (L.dot(A, A) <= Q(0)) return false;
    if (s.rho == 1) return L.dot(A, KY) < Q(0);
    for (int i : s.negatives)
        if (L.dot(A, neg[i]) <= Q(0)) return false;
    for (const auto& R : s.rigid)
        if (L.dot(A, R) <= Q(0)) return false;
    for (const auto& F : s.conics)
        if (L.dot(A, F) <= Q(0)) return false;
    return true;
}

}  // namespace

std::optional<IntVec> ChamberModel::ample_on(const std::vector<int>& I) const {
    const auto s = surface(I);
    const auto cs = classes(I);
    const IntVec KY = canonical_of(I);
    const std::size_t n = L_.rank();
    std::int64_t scale = 1;
    for (const auto& C : cs) scale = std::lcm(scale, orbit_size(L_, C));
    // Perturbations of -k K_Y by small vectors, ordered by size.
    std::vector<IntVec> shifts{IntVec(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (int a : {1, -1}) {
            IntVec v(n, 0);
            v[i] = a;
            shifts.push_back(v);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) {
                    IntVec v(n, 0);
                    v[i] = a, v[j] = b;
                    shifts.push_back(v);
                }
    for (std::int64_t k : {1, 2, 3, 4, 6}) {
        for (const auto& w : shifts) {
            QVec A = pushforward(L_, cs, to_q(w));
            for (std::size_t i = 0; i < n; ++i) A[i] = (A[i] - Q(k * KY[i])) * Q(scale);
            if (!ample_on_surface(L_, neg_, s, A, KY)) continue;
            IntVec out = to_int(A);
            std::int64_t g = 0;
            for (auto x : out) g = std::gcd(g, x);
            if (g > 1)
                for (auto& x : out) x /= g;
            return out;
        }
    }
    return std::nullopt;
}

bool ChamberModel::in_chamber(const std::vector<int>& I, const QVec& D) const {
    const auto cs = classes(I);
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b)
            if (L_.dot(cs[a], cs[b]) != 0) return false;
    for (const auto& C : cs)
        if (L_.dot(D, C) >= Q(0)) return false;
    const QVec P = pushforward(L_, cs, D);
    return ample_on_surface(L_, neg_, surface(I), P, canonical_of(I));
}

std::pair<std::vector<int>, QVec> ChamberModel::run(const QVec& D,
                                                    const std::function<std::size_t(std::size_t)>* pick) const {
    std::vector<int> I;
    QVec P = D;
    for (;;) {
        const auto s = surface(I);
        std::vector<int> candidates;
        for (int i : s.negatives)
            if (L_.dot(P, neg_[i]) < Q(0)) candidates.push_back(i);
        if (candidates.empty()) break;
        const std::size_t k = pick ? (*pick)(candidates.size()) % candidates.size() : 0;
        const int c = candidates[k];
        P = pushforward(L_, {neg_[c]}, P);
        I.push_back(c);
    }
    std::sort(I.begin(), I.end());
    const auto s = surface(I);
    for (const auto& R : s.rigid)
        if (L_.dot(P, R) < Q(0)) throw Error(ErrorKind::InvalidArgument, "ample model is singular");
    bool nef = true;
    for (const auto& F : s.conics) nef = nef && L_.dot(P, F) >= Q(0);
    if (s.rho == 1) nef = nef && L_.dot(P, canonical_of(I)) < Q(0);
    if (!nef || L_.dot(P, P) <= Q(0)) throw Error(ErrorKind::NotBig, "divisor is not big");
    return {I, P};
}

namespace {

QVec normalise(const Lattice& L, QVec D) {
    const Q k = L.dot(D, L.K);
    if (k < Q(0))
        for (auto& x : D) x /= -k;
    return D;
}

}  // namespace

std::pair<Chamber, QVec> run_ample_model(const Lattice& L, const QVec& D) {
    ChamberModel M(L);
    auto [I, P] = M.run(D);
    Chamber c{I, normalise(L, D), contract(L, M.classes(I))};
    return {c, P};
}

std::vector<Chamber> chambers(const Lattice& L) {
    ChamberModel M(L);
    std::vector<Chamber> out;
    for (const auto& I : M.contractible_sets()) {
        auto A = M.ample_on(I);
        if (!A) throw Error(ErrorKind::InvalidArgument, "no ample class found on a contraction");
        IntVec D = *A;
        for (int i : I)
            for (std::size_t j = 0; j < D.size(); ++j) D[j] += M.negatives()[i][j];
        const QVec cert = normalise(L, to_q(D));
        if (!M.in_chamber(I, cert)) throw Error(ErrorKind::InvalidArgument, "certificate left its chamber");
        out.push_back({I, cert, contract(L, M.classes(I))});
    }
    return out;
}

int codim_of_shared_face(const Chamber& c1, const Chamber& c2) {
    const auto& a = c1.contracted;
    const auto& b = c2.contracted;
    if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return static_cast<int>(b.size() - a.size());
    if (std::includes(a.begin(), a.end(), b.begin(), b.end())) return static_cast<int>(a.size() - b.size());
    throw Error(ErrorKind::NotNested, "contracted sets are not nested");
}

std::vector<Window> windows(const Lattice& L) {
    ChamberModel M(L);
    const auto sets = M.contractible_sets();
    std::vector<Window> out;
    for (std::size_t c = 0; c < sets.size(); ++c) {
        const auto& I = sets[c];
        const auto s = M.surface(I);
        if (s.rho == 1 && s.K2 >= 1 && s.rigid.empty()) out.push_back({I, std::nullopt, static_cast<int>(c)});
        if (s.rho != 2) continue;
        for (const auto& F : s.conics) {
            const bool rel_ample =
                std::none_of(s.rigid.begin(), s.rigid.end(), [&](const IntVec& R) { return L.dot(R, F) == 0; });
            if (rel_ample) out.push_back({I, F, static_cast<int>(c)});
        }
    }
    return out;
}

std::string format_class(const Lattice& L, const IntVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const std::int64_t a = std::llabs(v[i]);
        if (v[i] < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (a != 1) out += std::to_string(a);
        out += L.labels[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace cremona
