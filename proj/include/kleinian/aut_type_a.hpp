#pragma once

#include "kleinian/akm_quantization.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kleinian {

struct AutGenA {
    enum class Kind {
        Theta,    // (nu x, nu^-1 y, z)
        PhiPoly,  // exp((1/t) ad g^(y)), g^ the antiderivative of g
        PsiPoly,  // exp((1/t) ad h^(x))
        PhiLM,    // PhiPoly with g = m lambda y^(m-1)
        PsiLM,    // PsiPoly with h = m lambda x^(m-1)
        Omega,    // (y, (-1)^n x, t - z)
        V,        // (y, x, z), t = 0 only
        DeltaTri, // (x + [P(z + y g(y)) - P(z)]/y, y, z + y g(y)), t = 0 only
        NablaTri, // (x, y + [P(z - x g(x)) - P(z)]/x, z - x g(x)), t = 0 only
        Rescale,  // (nu^n x, y, nu z), t = 0 and P = z^n only
        Symmetry, // (mu^i x, y, mu z), t = 0 and P = z^i R(z^d), mu^d = 1
    };

    Kind kind = Kind::Theta;
    CycScalar scalar; // nu, lambda or mu
    MPoly poly;       // g or h
    long m = 0;       // m for PhiLM/PsiLM, d for Symmetry

    static AutGenA theta(const CycScalar &nu) { return {Kind::Theta, nu, {}, 0}; }
    static AutGenA phi(const MPoly &g) { return {Kind::PhiPoly, {}, g, 0}; }
    static AutGenA psi(const MPoly &h) { return {Kind::PsiPoly, {}, h, 0}; }
    static AutGenA phi_lm(const CycScalar &lambda, long m) { return {Kind::PhiLM, lambda, {}, m}; }
    static AutGenA psi_lm(const CycScalar &lambda, long m) { return {Kind::PsiLM, lambda, {}, m}; }
    static AutGenA omega() { return {Kind::Omega, {}, {}, 0}; }
    static AutGenA swap() { return {Kind::V, {}, {}, 0}; }
    static AutGenA delta(const MPoly &g) { return {Kind::DeltaTri, {}, g, 0}; }
    static AutGenA nabla(const MPoly &g) { return {Kind::NablaTri, {}, g, 0}; }
    static AutGenA rescale(const CycScalar &nu) { return {Kind::Rescale, nu, {}, 0}; }
    static AutGenA symmetry(const CycScalar &mu, long d) { return {Kind::Symmetry, mu, {}, d}; }

    // PhiLM/PsiLM rewritten as PhiPoly/PsiPoly; other kinds unchanged.
    AutGenA canonical() const;
    bool is_word_letter() const;

    friend bool operator==(const AutGenA &a, const AutGenA &b);
    std::string to_string() const;
};

// Word L1 L2 ... Lk standing for the composite L1 o L2 o ... o Lk.
struct AutWordA {
    std::vector<AutGenA> letters;
    TMode mode = TMode::Generic;
    friend bool operator==(const AutWordA &a, const AutWordA &b) {
        return a.mode == b.mode && a.letters == b.letters;
    }
    std::string to_string() const;
};

// Homomorphism from the algebra of `source` to the algebra of `target`,
// stored by the images of x, y, z. At t = 0 the images are elements of the
// commutative A_0 in GWA form.
struct AlgMapA {
    DefParamA source;
    DefParamA target;
    TMode mode = TMode::Generic;
    std::array<GwaElem, 3> images;
    bool verified = false;

    GwaAlgebra target_algebra() const { return {target, mode}; }
    GwaAlgebra source_algebra() const { return {source, mode}; }
    friend bool operator==(const AlgMapA &a, const AlgMapA &b);
    std::string to_string() const;
};

struct HomCertificate {
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> residuals;
};

AlgMapA identity_map(const DefParamA &param, TMode mode);
AlgMapA make_map(const DefParamA &source, const DefParamA &target, TMode mode,
                 const GwaElem &x, const GwaElem &y, const GwaElem &z);

// Target parameter of Omega: (-1)^n P(-z).
DefParamA omega_target(const DefParamA &param);
// Omega as an isomorphism A(P) -> A((-1)^n P(-z)); defined for every P.
AlgMapA omega_iso(const DefParamA &param, TMode mode);

AlgMapA gen_to_map(const AutGenA &gen, const DefParamA &param, TMode mode);
// exp of (1/t) ad of the antiderivative of g, where g is a polynomial in
// y only or x only; at t = 0 the Poisson adjoint is used.
AlgMapA exp_ad_a(const MPoly &g, const DefParamA &param, TMode mode);
// The closed formulas for Phi_{lambda,m} and Psi_{lambda,m}.
AlgMapA closed_phi_lm(const CycScalar &lambda, long m, const DefParamA &param, TMode mode);
AlgMapA closed_psi_lm(const CycScalar &lambda, long m, const DefParamA &param, TMode mode);

GwaElem apply_map(const AlgMapA &map, const GwaElem &elem);
ElemADef apply_map(const AlgMapA &map, const ElemADef &elem);
// f o g
AlgMapA compose_maps(const AlgMapA &f, const AlgMapA &g);
AlgMapA evaluate_word(const AutWordA &word, const DefParamA &param);

HomCertificate verify_hom_a(const AlgMapA &map);
bool is_poisson_map_a(const AlgMapA &map);

AutWordA word_normal_form(const AutWordA &word, const DefParamA &param);

std::array<long, 3> mdeg_aut(const AlgMapA &map);
std::array<long, 3> predicted_mdeg(const AutWordA &canonical, const DefParamA &param);

struct AutGroupDescriptor {
    bool reflective = false;
    int n = 0;
    std::string structure;
    std::string factor_h;
    std::string factor_k;
    std::string amalgamated;
    std::string to_string() const;
};

AutGroupDescriptor describe_aut_group_a(const DefParamA &param);

// Witnesses are maps; absent means not isomorphic.
std::optional<AlgMapA> decide_iso_quant_a(const DefParamA &p1, const DefParamA &p2,
                                          TMode mode = TMode::One);
enum class IsoKindA { Poisson, Affine };
std::optional<AlgMapA> decide_iso_def_a(const DefParamA &p1, const DefParamA &p2, IsoKindA kind,
                                        const std::optional<CycScalar> &alpha = std::nullopt);

// tau = (y, (-1)^n x, -z) : A(P) -> A((-1)^n P(-z)) at t = 0.
AlgMapA tau_iso(const DefParamA &param);
// R_alpha = (alpha^n x, y, alpha z) : A(P) -> A(alpha^-n P(alpha z)) at t = 0.
AlgMapA r_alpha_iso(const DefParamA &param, const CycScalar &alpha);

} // namespace kleinian
