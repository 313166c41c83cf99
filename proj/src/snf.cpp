#include "siegel/snf.hpp"

namespace siegel {

namespace {

struct Worker {
    IntMat A, U, V, Uinv, Vinv;

    explicit Worker(const IntMat& a)
        : A(a),
          U(IntMat::identity(a.rows())),
          V(IntMat::identity(a.cols())),
          Uinv(IntMat::identity(a.rows())),
          Vinv(IntMat::identity(a.cols())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    void addmul_row(int i, int j, const Int& c) {  // row i += c*row j
        A.addmul_row(i, j, c);
        U.addmul_row(i, j, c);
        Uinv.addmul_col(j, i, -c);
    }
    void addmul_col(int i, int j, const Int& c) {  // col i += c*col j
        A.addmul_col(i, j, c);
        V.addmul_col(i, j, c);
        Vinv.addmul_row(j, i, -c);
    }
    void negate_row(int i) {
        A.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
    void negate_col(int j) {
        A.negate_col(j);
        V.negate_col(j);
        Vinv.negate_row(j);
    }

    // (row_t, row_i) <- (x row_t + y row_i, -(b/g) row_t + (a/g) row_i)
    // with a = A(t,c), b = A(i,c), g = gcd: one Bezout step per cleared
    // entry keeps coefficient growth tame.
    void bezout_rows(int t, int i, int c) {
        const Int a = A(t, c), b = A(i, c);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            addmul_row(i, t, -(b / a));
            return;
        }
        ExtGcd e = egcd(a, b);
        Int p = a / e.g, q = b / e.g;
        apply_rows(t, i, e.x, e.y, -q, p);
    }
    void bezout_cols(int t, int j, int r) {
        const Int a = A(r, t), b = A(r, j);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            addmul_col(j, t, -(b / a));
            return;
        }
        ExtGcd e = egcd(a, b);
        Int p = a / e.g, q = b / e.g;
        apply_cols(t, j, e.x, e.y, -q, p);
    }

    // Simultaneous unimodular transform of two rows, det(x p - y q) = 1.
    void apply_rows(int i, int j, const Int& x, const Int& y, const Int& mq, const Int& p) {
        for (int k = 0; k < A.cols(); ++k) {
            Int ai = A(i, k), aj = A(j, k);
            A(i, k) = x * ai + y * aj;
            A(j, k) = mq * ai + p * aj;
        }
        for (int k = 0; k < U.cols(); ++k) {
            Int ui = U(i, k), uj = U(j, k);
            U(i, k) = x * ui + y * uj;
            U(j, k) = mq * ui + p * uj;
        }
        // Uinv <- Uinv * L^{-1}, L^{-1} = [[p, -y], [q, x]] on coords (i, j)
        for (int k = 0; k < Uinv.rows(); ++k) {
            Int ci = Uinv(k, i), cj = Uinv(k, j);
            Uinv(k, i) = p * ci - mq * cj;
            Uinv(k, j) = -y * ci + x * cj;
        }
    }
    void apply_cols(int i, int j, const Int& x, const Int& y, const Int& mq, const Int& p) {
        for (int k = 0; k < A.rows(); ++k) {
            Int ai = A(k, i), aj = A(k, j);
            A(k, i) = x * ai + y * aj;
            A(k, j) = mq * ai + p * aj;
        }
        for (int k = 0; k < V.rows(); ++k) {
            Int vi = V(k, i), vj = V(k, j);
            V(k, i) = x * vi + y * vj;
            V(k, j) = mq * vi + p * vj;
        }
        for (int k = 0; k < Vinv.cols(); ++k) {
            Int ri = Vinv(i, k), rj = Vinv(j, k);
            Vinv(i, k) = p * ri - mq * rj;
            Vinv(j, k) = -y * ri + x * rj;
        }
    }

    // Pivot choice: minimal nonzero absolute value in the trailing block.
    bool find_pivot(int t, int& pi, int& pj) {
        bool found = false;
        Int best = 0;
        for (int i = t; i < A.rows(); ++i)
            for (int j = t; j < A.cols(); ++j) {
                if (A(i, j) == 0) continue;
                Int v = iabs(A(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    bool row_col_clear(int t) {
        for (int i = t + 1; i < A.rows(); ++i)
            if (A(i, t) != 0) return false;
        for (int j = t + 1; j < A.cols(); ++j)
            if (A(t, j) != 0) return false;
        return true;
    }

    void run() {
        int t = 0;
        int n = std::min(A.rows(), A.cols());
        while (t < n) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            while (!row_col_clear(t)) {
                for (int i = t + 1; i < A.rows(); ++i) bezout_rows(t, i, t);
                for (int j = t + 1; j < A.cols(); ++j) bezout_cols(t, j, t);
            }
            if (A(t, t) < 0) negate_row(t);

            // Pivot must divide the remaining block; fold a bad row in and redo.
            bool restart = false;
            for (int i = t + 1; i < A.rows() && !restart; ++i)
                for (int j = t + 1; j < A.cols() && !restart; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        addmul_row(t, i, Int(1));
                        restart = true;
                    }
            if (restart) continue;
            ++t;
        }
        for (int i = 0; i < n; ++i)
            if (A(i, i) < 0) negate_row(i);
    }
};

}  // namespace

SmithDecomposition snf(const IntMat& A0) {
    Worker w(A0);
    w.run();
    SmithDecomposition s;
    s.A = A0;
    s.D = w.A;
    s.U = w.U;
    s.V = w.V;
    s.Uinv = w.Uinv;
    s.Vinv = w.Vinv;
    int n = std::min(s.D.rows(), s.D.cols());
    s.rank = 0;
    for (int i = 0; i < n; ++i)
        if (s.D(i, i) != 0) ++s.rank;
    return s;
}

IntMat hnf_rows(const IntMat& A0) {
    IntMat A = A0;
    int m = A.rows(), n = A.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // gcd-clear column c below row r with simultaneous Bezout transforms
        for (int i = r + 1; i < m; ++i) {
            const Int a = A(r, c), b = A(i, c);
            if (b == 0) continue;
            if (a != 0 && b % a == 0) {
                A.addmul_row(i, r, -(b / a));
                continue;
            }
            ExtGcd e = egcd(a, b);
            Int p = a / e.g, q = b / e.g;
            for (int k = 0; k < n; ++k) {
                Int ar = A(r, k), ai = A(i, k);
                A(r, k) = e.x * ar + e.y * ai;
                A(i, k) = -q * ar + p * ai;
            }
        }
        if (A(r, c) == 0) continue;
        if (A(r, c) < 0) A.negate_row(r);
        for (int i = 0; i < r; ++i) {
            Int q = A(i, c) / A(r, c);
            if (A(i, c) - q * A(r, c) < 0) q -= 1;
            A.addmul_row(i, r, -q);
        }
        ++r;
    }
    return A;
}

IntMat kernel(const IntMat& A) {
    SmithDecomposition s = snf(A);
    int n = A.cols();
    int k = n - s.rank;
    IntMat K(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) K(i, j) = s.V(i, s.rank + j);
    return K;
}

std::vector<Int> cokernel_factors(const IntMat& A) {
    SmithDecomposition s = snf(A);
    std::vector<Int> f;
    for (int i = 0; i < s.rank; ++i)
        if (s.D(i, i) > 1) f.push_back(s.D(i, i));
    for (int i = s.rank; i < A.rows(); ++i) f.push_back(0);
    return f;
}

Saturation saturate_rows(const IntMat& G) {
    SmithDecomposition s = snf(G);
    Saturation r;
    r.rank = s.rank;
    r.index = 1;
    for (int i = 0; i < s.rank; ++i) r.index *= s.D(i, i);
    // rows(G) = U^{-1} D V^{-1}; the saturated row lattice is spanned by the
    // first `rank` rows of V^{-1}.
    r.basis = IntMat(s.rank, G.cols());
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < G.cols(); ++j) r.basis(i, j) = s.Vinv(i, j);
    return r;
}

std::optional<std::vector<Int>> solve(const IntMat& A, const std::vector<Int>& b) {
    check(static_cast<int>(b.size()) == A.rows(), "solve: rhs size mismatch");
    SmithDecomposition s = snf(A);
    std::vector<Int> c = s.U.apply(b);
    std::vector<Int> y(A.cols(), Int(0));
    for (int i = 0; i < A.rows(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.D(i, i) != 0) return std::nullopt;
            if (i < A.cols()) y[i] = c[i] / s.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

bool in_column_span(const IntMat& A, const std::vector<Int>& b) {
    return solve(A, b).has_value();
}

Int abs_det(const IntMat& A) {
    check(A.rows() == A.cols(), "abs_det: not square");
    SmithDecomposition s = snf(A);
    if (s.rank < A.rows()) return 0;
    Int d = 1;
    for (int i = 0; i < s.rank; ++i) d *= s.D(i, i);
    return d;
}

IntMat unimodular_inverse(const IntMat& A) {
    SmithDecomposition s = snf(A);
    check(s.rank == A.rows() && s.rank == A.cols(), "unimodular_inverse: singular");
    for (int i = 0; i < s.rank; ++i) check(s.D(i, i) == 1, "unimodular_inverse: |det| != 1");
    // U A V = I, so A^{-1} = V U.
    return s.V * s.U;
}

std::vector<Int> primitive(std::vector<Int> v) {
    Int g = 0;
    for (const Int& x : v) g = igcd(g, x);
    if (g == 0) return v;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

}  // namespace siegel
