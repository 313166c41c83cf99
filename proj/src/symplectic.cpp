#include "siegel/symplectic.hpp"

#include "siegel/snf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace siegel {

IntMat symplectic_form(int g) {
    IntMat j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, 2 * g - 1 - i) = 1;
        j(2 * g - 1 - i, i) = -1;
    }
    return j;
}

FpMat symplectic_form_mod(int g, int p) {
    FpMat j(p, 2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, 2 * g - 1 - i) = 1;
        j(2 * g - 1 - i, i) = p - 1;
    }
    return j;
}

void ParahoricType::validate() const {
    check(g >= 1, "ParahoricType: g >= 1");
    check(!d.empty(), "ParahoricType: D must be nonempty");
    for (size_t i = 0; i < d.size(); ++i) {
        check(d[i] >= 1 && d[i] <= g, "ParahoricType: entries must lie in {1,...,g}");
        if (i > 0) check(d[i] > d[i - 1], "ParahoricType: strictly increasing");
    }
}

void IsotropicFlag::canonicalize() {
    for (FpMat& l : levels) l = l.row_basis();
}

bool IsotropicFlag::is_isotropic() const {
    if (levels.empty()) return true;
    const FpMat& top = levels.back();
    FpMat gram = top * symplectic_form_mod(g, p) * top.transpose();
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            if (gram(i, j) % p != 0) return false;
    // nesting
    for (size_t i = 0; i + 1 < levels.size(); ++i)
        if (dim_sum(levels[i], levels[i + 1]) != levels[i + 1].rank()) return false;
    return true;
}

std::string IsotropicFlag::key() const {
    std::string s;
    for (const FpMat& l : levels) {
        s += l.key();
        s.push_back('|');
    }
    return s;
}

WeightFlag WeightFlag::standard(const SymplecticSpace& sp, int r) {
    check(r >= 0 && r <= sp.g, "WeightFlag: 0 <= r <= g");
    FpMat w1(sp.p, r, sp.dim());
    for (int i = 0; i < r; ++i) w1(i, i) = 1;
    return WeightFlag{sp.g, sp.p, r, w1};
}

WeightFlag WeightFlag::from_subspace(const SymplecticSpace& sp, const FpMat& w1) {
    FpMat b = w1.row_basis();
    WeightFlag w{sp.g, sp.p, b.rank(), b};
    FpMat gram = b * symplectic_form_mod(sp.g, sp.p) * b.transpose();
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            check(gram(i, j) % sp.p == 0, "WeightFlag: W_1 must be isotropic");
    return w;
}

FpMat WeightFlag::w2() const {
    // {v : W_1 J v^t = 0}
    FpMat m = w1 * symplectic_form_mod(g, p);
    return m.kernel().row_basis();
}

bool PositionInvariant::operator<(const PositionInvariant& o) const {
    if (r != o.r) return r < o.r;
    if (m != o.m) return m < o.m;
    if (a != o.a) return a < o.a;
    return e < o.e;
}

void PositionInvariant::validate(const ParahoricType& t) const {
    int s = t.s();
    check(static_cast<int>(m.size()) == s && static_cast<int>(a.size()) == s &&
              static_cast<int>(e.size()) == s,
          "PositionInvariant: sequence length mismatch");
    for (int i = 0; i < s; ++i) {
        check(m[i] + a[i] + e[i] == t.d[i], "PositionInvariant: m+a+e = d violated");
        check(m[i] >= 0 && m[i] <= r, "PositionInvariant: m out of range");
        check(e[i] >= 0 && e[i] <= r, "PositionInvariant: e out of range");
        check(a[i] >= 0 && a[i] <= 2 * (t.g - r), "PositionInvariant: a out of range");
        if (i > 0)
            check(m[i] >= m[i - 1] && a[i] >= a[i - 1] && e[i] >= e[i - 1],
                  "PositionInvariant: sequences must be non-decreasing");
    }
}

IsotropicFlag std_flag(const ParahoricType& t, const SymplecticSpace& sp) {
    check(t.g == sp.g, "std_flag: genus mismatch");
    IsotropicFlag f{sp.g, sp.p, {}};
    for (int di : t.d) {
        FpMat l(sp.p, di, sp.dim());
        for (int i = 0; i < di; ++i) l(i, i) = 1;
        f.levels.push_back(l);
    }
    check(f.is_isotropic(), "std_flag: not isotropic");
    return f;
}

namespace {

// Basis (rows) of rowspace(A) cap rowspace(B).
FpMat intersection_basis(const FpMat& A, const FpMat& B) {
    if (A.rows() == 0 || B.rows() == 0) return FpMat(A.p(), 0, A.cols());
    FpMat negB = B;
    for (int i = 0; i < negB.rows(); ++i)
        for (int j = 0; j < negB.cols(); ++j) negB(i, j) = (A.p() - negB(i, j)) % A.p();
    FpMat S = A.vstack(negB);            // (k+l) x n
    FpMat K = S.transpose().kernel();    // rows (a|b) with aA = bB
    FpMat out(A.p(), K.rows(), A.cols());
    for (int i = 0; i < K.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            int acc = 0;
            for (int t = 0; t < A.rows(); ++t) acc = (acc + K(i, t) * A(t, j)) % A.p();
            out(i, j) = acc;
        }
    return out.row_basis();
}

std::vector<std::vector<int>> all_coeff_tuples(int p, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < k && ++cur[i] == p) cur[i++] = 0;
        if (i == k) break;
    }
    return out;
}

// All vectors in the row space of B (including 0).
std::vector<std::vector<int>> span_vectors(const FpMat& B) {
    std::vector<std::vector<int>> out;
    for (const auto& c : all_coeff_tuples(B.p(), B.rows())) {
        std::vector<int> v(B.cols(), 0);
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j) v[j] = (v[j] + c[i] * B(i, j)) % B.p();
        out.push_back(v);
    }
    return out;
}

bool in_rowspace(const FpMat& B, const std::vector<int>& v) {
    FpMat ext(B.p(), B.rows() + 1, B.cols());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) ext(i, j) = B(i, j);
    for (int j = 0; j < B.cols(); ++j) ext(B.rows(), j) = v[j];
    return ext.rank() == B.rank();
}

// All k-dimensional subspaces of the row space of a basis matrix.
std::vector<FpMat> subspaces_of(const FpMat& space, int k) {
    std::set<std::string> seen;
    std::vector<FpMat> out;
    int n = space.rows();
    if (k > n) return out;
    // enumerate k x n coefficient matrices, keep canonical bases of rank k
    std::vector<std::vector<int>> tuples = all_coeff_tuples(space.p(), n);
    std::vector<std::vector<int>> rowsel(k);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == k) {
            FpMat coeff(space.p(), k, n);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j) coeff(i, j) = rowsel[i][j];
            if (coeff.rank() < k) return;
            FpMat sub = (coeff * space).row_basis();
            auto key = sub.key();
            if (seen.insert(key).second) out.push_back(sub);
            return;
        }
        for (const auto& t : tuples) {
            rowsel[depth] = t;
            rec(depth + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

PositionInvariant invariants(const IsotropicFlag& flag, const WeightFlag& w) {
    check(flag.is_isotropic(), "invariants: flag is not isotropic");
    check(flag.g == w.g && flag.p == w.p, "invariants: space mismatch");
    FpMat w2 = w.w2();
    PositionInvariant out;
    out.r = w.r;
    for (const FpMat& h : flag.levels) {
        int mh = dim_intersection(h, w.w1);
        FpMat hw2 = intersection_basis(h, w2);
        int ah = dim_sum(hw2, w.w1) - w.w1.rank();
        int eh = h.rank() - hw2.rank();
        out.m.push_back(mh);
        out.a.push_back(ah);
        out.e.push_back(eh);
    }
    return out;
}

std::vector<FpMat> isotropic_subspaces(const SymplecticSpace& sp, int r) {
    FpMat jm = symplectic_form_mod(sp.g, sp.p);
    std::vector<FpMat> cur = {FpMat(sp.p, 0, sp.dim())};
    for (int step = 0; step < r; ++step) {
        std::set<std::string> seen;
        std::vector<FpMat> next;
        for (const FpMat& s : cur) {
            // candidates: vectors orthogonal to s, outside s
            FpMat orth = s.rows() == 0 ? FpMat::identity(sp.p, sp.dim())
                                       : (s * jm).kernel().row_basis();
            for (const auto& v : span_vectors(orth)) {
                bool zero = true;
                for (int x : v) zero &= (x == 0);
                if (zero || in_rowspace(s, v)) continue;
                FpMat ext(sp.p, s.rows() + 1, sp.dim());
                for (int i = 0; i < s.rows(); ++i)
                    for (int j = 0; j < sp.dim(); ++j) ext(i, j) = s(i, j);
                for (int j = 0; j < sp.dim(); ++j) ext(s.rows(), j) = v[j];
                FpMat canon = ext.row_basis();
                if (seen.insert(canon.key()).second) next.push_back(canon);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<IsotropicFlag> isotropic_flags(const SymplecticSpace& sp, const ParahoricType& t) {
    int s = t.s();
    std::vector<IsotropicFlag> out;
    for (const FpMat& top : isotropic_subspaces(sp, t.d[s - 1])) {
        std::vector<std::vector<FpMat>> chains = {{top}};
        for (int i = s - 2; i >= 0; --i) {
            std::vector<std::vector<FpMat>> next;
            for (auto& ch : chains)
                for (const FpMat& sub : subspaces_of(ch.front(), t.d[i])) {
                    auto c2 = ch;
                    c2.insert(c2.begin(), sub);
                    next.push_back(std::move(c2));
                }
            chains = std::move(next);
        }
        for (auto& ch : chains) {
            IsotropicFlag f{sp.g, sp.p, std::move(ch)};
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

FpMat apply_to_flagspace(const FpMat& basis, const FpMat& gamma) {
    return (basis * gamma.transpose()).row_basis();
}

std::vector<FpMat> gsp_generators(const SymplecticSpace& sp) {
    std::vector<FpMat> gens;
    FpMat jm = symplectic_form_mod(sp.g, sp.p);
    int n = sp.dim();
    // symplectic transvections x -> x + c J(x,v) v over all directions v
    for (const auto& v : span_vectors(FpMat::identity(sp.p, n))) {
        bool zero = true;
        for (int x : v) zero &= (x == 0);
        if (zero) continue;
        for (int c = 1; c < sp.p; ++c) {
            FpMat m = FpMat::identity(sp.p, n);
            // column action: m(x) = x + c*J(x,v)*v, J(x,v) = x^T J v
            std::vector<int> jv(n, 0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) jv[i] = (jv[i] + jm(i, k) * v[k]) % sp.p;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    m(i, k) = (m(i, k) + c * v[i] * jv[k]) % sp.p;
            gens.push_back(m);
        }
    }
    // similitude scalars diag(I, nu I)
    for (int nu = 2; nu < sp.p; ++nu) {
        FpMat m = FpMat::identity(sp.p, n);
        for (int i = sp.g; i < n; ++i) m(i, i) = nu;
        gens.push_back(m);
    }
    return gens;
}

}  // namespace

std::vector<PositionInvariant> admissible_triples(int g, int r, const ParahoricType& t) {
    int s = t.s();
    std::vector<PositionInvariant> out;
    PositionInvariant cur;
    cur.r = r;
    cur.m.assign(s, 0);
    cur.a.assign(s, 0);
    cur.e.assign(s, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == s) {
            out.push_back(cur);
            return;
        }
        int mlo = i ? cur.m[i - 1] : 0;
        int alo = i ? cur.a[i - 1] : 0;
        int elo = i ? cur.e[i - 1] : 0;
        for (int mi = mlo; mi <= std::min(r, t.d[i]); ++mi)
            for (int ei = elo; ei <= r - mi; ++ei) {
                int ai = t.d[i] - mi - ei;
                if (ai < alo || ai > g - r) continue;
                cur.m[i] = mi;
                cur.a[i] = ai;
                cur.e[i] = ei;
                rec(i + 1);
            }
        cur.m[i] = mlo;
        cur.a[i] = alo;
        cur.e[i] = elo;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PositionInvariant> enumerate_positions(int g, int p, int r, const ParahoricType& t) {
    check(p == 2 || p == 3 || p == 5, "enumerate_positions: p in {2,3,5} required");
    check(g <= 3, "enumerate_positions: g <= 3 required for the brute-force path");
    SymplecticSpace sp(g, p);
    WeightFlag w = WeightFlag::standard(sp, r);

    // Route (i): orbit of the standard flag under group generators, BFS.
    std::vector<FpMat> gens = gsp_generators(sp);
    IsotropicFlag start = std_flag(t, sp);
    start.canonicalize();
    std::set<std::string> seen = {start.key()};
    std::vector<IsotropicFlag> frontier = {start};
    std::set<PositionInvariant> orbit_invs = {invariants(start, w)};
    while (!frontier.empty()) {
        std::vector<IsotropicFlag> next;
        for (const IsotropicFlag& f : frontier)
            for (const FpMat& gmat : gens) {
                IsotropicFlag img{g, p, {}};
                img.levels.reserve(f.levels.size());
                for (const FpMat& l : f.levels) img.levels.push_back(apply_to_flagspace(l, gmat));
                if (seen.insert(img.key()).second) {
                    orbit_invs.insert(invariants(img, w));
                    next.push_back(std::move(img));
                }
            }
        frontier = std::move(next);
    }

    // Route (ii): direct enumeration of admissible triples.
    std::vector<PositionInvariant> direct = admissible_triples(g, r, t);
    std::vector<PositionInvariant> orbit(orbit_invs.begin(), orbit_invs.end());
    if (orbit != direct)
        fail("enumerate_positions: admissible-triple set disagrees with the orbit oracle (g=" +
             std::to_string(g) + ", p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")");
    for (const auto& w0 : orbit) w0.validate(t);
    return orbit;
}

namespace {

struct SignedPerm {
    std::vector<int> perm;   // j -> perm[j]
    std::vector<int> sign;   // +-1
    bool operator<(const SignedPerm& o) const {
        if (perm != o.perm) return perm < o.perm;
        return sign < o.sign;
    }
    bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }
};

SignedPerm compose(const SignedPerm& w1, const SignedPerm& w2) {
    int g = static_cast<int>(w1.perm.size());
    SignedPerm r;
    r.perm.resize(g);
    r.sign.resize(g);
    for (int j = 0; j < g; ++j) {
        r.perm[j] = w1.perm[w2.perm[j]];
        r.sign[j] = w2.sign[j] * w1.sign[w2.perm[j]];
    }
    return r;
}

std::vector<SignedPerm> hyperoctahedral(int g) {
    std::vector<int> base(g);
    for (int i = 0; i < g; ++i) base[i] = i;
    std::vector<SignedPerm> out;
    std::vector<int> perm = base;
    do {
        for (int mask = 0; mask < (1 << g); ++mask) {
            SignedPerm w;
            w.perm = perm;
            w.sign.resize(g);
            for (int j = 0; j < g; ++j) w.sign[j] = (mask >> j & 1) ? -1 : 1;
            out.push_back(w);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Weyl subgroup of a Levi with GL-blocks on [0, cut) split at `blocks`
// boundaries and a full hyperoctahedral tail on [cut, g).
bool in_levi_weyl(const SignedPerm& w, const std::vector<int>& blocks, int g) {
    int cut = blocks.empty() ? 0 : blocks.back();
    for (int j = 0; j < cut; ++j)
        if (w.sign[j] != 1) return false;
    for (int j = cut; j < g; ++j)
        if (w.perm[j] < cut || w.perm[j] >= g) return false;
    int lo = 0;
    for (int b : blocks) {
        for (int j = lo; j < b; ++j)
            if (w.perm[j] < lo || w.perm[j] >= b) return false;
        lo = b;
    }
    return true;
}

}  // namespace

long bruhat_count(int g, int r, const ParahoricType& t) {
    check(g <= 4, "bruhat_count: g <= 4");
    check(r >= 0 && r <= g, "bruhat_count: 0 <= r <= g");
    std::vector<SignedPerm> W = hyperoctahedral(g);
    std::vector<int> lblocks = r > 0 ? std::vector<int>{r} : std::vector<int>{};
    std::vector<int> rblocks(t.d.begin(), t.d.end());
    std::vector<SignedPerm> L, R;
    for (const auto& w : W) {
        if (in_levi_weyl(w, lblocks, g)) L.push_back(w);
        if (in_levi_weyl(w, rblocks, g)) R.push_back(w);
    }
    std::map<SignedPerm, int> index;
    for (size_t i = 0; i < W.size(); ++i) index[W[i]] = static_cast<int>(i);
    std::vector<bool> done(W.size(), false);
    long classes = 0;
    for (size_t i = 0; i < W.size(); ++i) {
        if (done[i]) continue;
        ++classes;
        std::vector<int> stack = {static_cast<int>(i)};
        done[i] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& l : L)
                for (const auto& rr : R) {
                    int nxt = index[compose(compose(l, W[cur]), rr)];
                    if (!done[nxt]) {
                        done[nxt] = true;
                        stack.push_back(nxt);
                    }
                }
        }
    }
    return classes;
}

ParahoricChain parahoric_chain(const ParahoricType& t, int p) {
    int g = t.g, s = t.s();
    ParahoricChain c{g, p, {}};
    auto member = [&](int brk) {
        IntMat m = IntMat::identity(2 * g);
        for (int i = brk; i < 2 * g; ++i) m(i, i) = p;
        return m;
    };
    for (int i = 1; i <= s; ++i) c.lattices.push_back(member(t.d[i - 1]));
    for (int i = 1; i <= s; ++i) c.lattices.push_back(member(2 * g - t.d[s - i]));
    return c;
}

namespace {

// v in the diagonal lattice given by basis diag(c_j): coordinates divisible.
bool in_diag_lattice(const IntMat& lat, const std::vector<Int>& v) {
    for (int j = 0; j < lat.rows(); ++j)
        if (v[j] % lat(j, j) != 0) return false;
    return true;
}

}  // namespace

bool in_gamma0(const IntMat& gamma, const ParahoricType& t, int p) {
    int n = 2 * t.g;
    check(gamma.rows() == n && gamma.cols() == n, "in_gamma0: shape");
    IntMat j = symplectic_form(t.g);
    IntMat gtjg = gamma.transpose() * j * gamma;
    if (gtjg != j && gtjg != -j) return false;
    ParahoricChain c = parahoric_chain(t, p);
    for (const IntMat& lat : c.lattices)
        for (int col = 0; col < n; ++col) {
            // image of the col-th lattice basis vector
            std::vector<Int> v(n, Int(0));
            for (int i = 0; i < n; ++i) v[i] = gamma(i, col) * lat(col, col);
            if (!in_diag_lattice(lat, v)) return false;
        }
    return true;
}

std::vector<IntMat> gamma0_witness_generators(const ParahoricType& t, int p) {
    int g = t.g, n = 2 * g;
    IntMat j = symplectic_form(g);
    std::vector<IntMat> out;
    auto consider = [&](const IntMat& m) {
        if (in_gamma0(m, t, p)) out.push_back(m);
    };
    // transvections x -> x + c J(x,v) v for coordinate and near-coordinate v
    std::vector<std::vector<Int>> dirs;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        dirs.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (i == k) continue;
            std::vector<Int> e(n, Int(0));
            e[i] = 1;
            e[k] = 1;
            dirs.push_back(e);
        }
    for (const auto& v : dirs)
        for (int c : {1, -1, p, -p}) {
            IntMat m = IntMat::identity(n);
            std::vector<Int> jv(n, Int(0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) jv[i] += j(i, k) * v[k];
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) m(i, k) += Int(c) * v[i] * jv[k];
            consider(m);
        }
    // -identity
    consider(-IntMat::identity(n));
    return out;
}

}  // namespace siegel
