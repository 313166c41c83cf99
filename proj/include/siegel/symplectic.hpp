#pragma once

#include "siegel/fpmat.hpp"
#include "siegel/intmat.hpp"

#include <vector>

namespace siegel {

// V = Z^{2g} (or F_p^{2g}) with the alternating form J = [[0, J'], [-J', 0]],
// J' the g x g antidiagonal of ones.
struct SymplecticSpace {
    int g, p;
    SymplecticSpace(int g_, int p_) : g(g_), p(p_) {
        check(g >= 1, "SymplecticSpace: g >= 1 required");
        check(p >= 2, "SymplecticSpace: p >= 2 required");
    }
    int dim() const { return 2 * g; }
};

IntMat symplectic_form(int g);
FpMat symplectic_form_mod(int g, int p);

// Parahoric type D = {d_1 < ... < d_s} inside {1, ..., g}.
struct ParahoricType {
    int g;
    std::vector<int> d;

    ParahoricType(int g_, std::vector<int> d_) : g(g_), d(std::move(d_)) { validate(); }
    void validate() const;
    int s() const { return static_cast<int>(d.size()); }
};

// Flag of subspaces of F_p^{2g}, each stored as a canonical reduced row
// basis; the top step must be totally isotropic.
struct IsotropicFlag {
    int g, p;
    std::vector<FpMat> levels;

    void canonicalize();
    bool is_isotropic() const;
    std::string key() const;
};

// Weight flag W_1 <= W_2 = W_1-perp <= V determined by an isotropic W_1.
struct WeightFlag {
    int g, p, r;
    FpMat w1;  // r x 2g basis rows

    static WeightFlag standard(const SymplecticSpace& sp, int r);
    static WeightFlag from_subspace(const SymplecticSpace& sp, const FpMat& w1);
    FpMat w2() const;  // basis of W_1-perp
};

struct PositionInvariant {
    int r = 0;
    std::vector<int> m, a, e;

    bool operator==(const PositionInvariant& o) const {
        return r == o.r && m == o.m && a == o.a && e == o.e;
    }
    bool operator<(const PositionInvariant& o) const;
    void validate(const ParahoricType& t) const;
};

IsotropicFlag std_flag(const ParahoricType& t, const SymplecticSpace& sp);

// Relative position of an isotropic flag against a weight flag:
// m_i = dim(H_i cap W_1), a_i = dim im(H_i cap W_2 -> W_2/W_1),
// e_i = dim im(H_i -> V/W_2).
PositionInvariant invariants(const IsotropicFlag& flag, const WeightFlag& w);

// The set of relative positions for given torus rank r, computed two ways
// (orbit closure of the standard flag under group generators, and direct
// enumeration of admissible triples) and cross-checked; throws on mismatch.
std::vector<PositionInvariant> enumerate_positions(int g, int p, int r, const ParahoricType& t);

// Admissible-triple enumeration alone (the conjectured constraint set).
std::vector<PositionInvariant> admissible_triples(int g, int r, const ParahoricType& t);

// Number of double cosets W_L \ W(C_g) / W_{L_D} for the Levi Weyl groups
// attached to torus rank r and to the type D.
long bruhat_count(int g, int r, const ParahoricType& t);

// All isotropic r-dimensional subspaces of F_p^{2g} (canonical row bases).
std::vector<FpMat> isotropic_subspaces(const SymplecticSpace& sp, int r);

// All isotropic flags of type D (used as the brute-force oracle).
std::vector<IsotropicFlag> isotropic_flags(const SymplecticSpace& sp, const ParahoricType& t);

// Self-dual parahoric chain: member i (1-based, i <= s) is the diagonal
// lattice with the first d_i coordinates unscaled and the rest scaled by p;
// members s+1..2s are the dual-side lattices with breaks 2g - d_{s+1-i}.
struct ParahoricChain {
    int g, p;
    std::vector<IntMat> lattices;  // 2s diagonal basis matrices, size 2g

    IntMat full() const { return IntMat::identity(2 * g); }
    IntMat scaled() const {
        IntMat m = IntMat::identity(2 * g);
        for (int i = 0; i < 2 * g; ++i) m(i, i) = p;
        return m;
    }
};

ParahoricChain parahoric_chain(const ParahoricType& t, int p);

// gamma in GSp_{2g}(Z) with similitude +-1 stabilizing every chain member.
bool in_gamma0(const IntMat& gamma, const ParahoricType& t, int p);

// Generator pool for the group of in_gamma0 elements: symplectic
// transvections and monomial symplectic matrices filtered by membership.
// This is a witness set for bounded verification, not a proven generating set.
std::vector<IntMat> gamma0_witness_generators(const ParahoricType& t, int p);

}  // namespace siegel
