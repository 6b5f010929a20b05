#pragma once

#include "kleinian/dkm_algebras.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kleinian {

enum class FlavorD { Quantized, Deformed };
const char *flavor_name(FlavorD f);

// A map D(source) -> D(target) given by the images of x, y, z. Images are
// bodies in the target: ordered words for the quantized flavor, normal forms
// f + g z for the deformed one.
struct IsoD {
    DefParamD source;
    DefParamD target;
    FlavorD flavor = FlavorD::Deformed;
    std::array<MPoly, 3> images;
    std::string name;

    ElemDQuant quant_image(int i) const { return ElemDQuant(target, images[i]); }
    ElemDDef def_image(int i) const { return ElemDDef(target, images[i]); }

    bool same_map(const IsoD &o) const;
    std::string to_string() const;
};

IsoD identity_d(const DefParamD &param, FlavorD flavor);
// Images are read in the target and normalized there.
IsoD make_iso_d(const DefParamD &source, const DefParamD &target, FlavorD flavor,
                const std::array<MPoly, 3> &images, std::string name = "");

// (x, -y, -z) : (Q, gamma) -> (Q, -gamma).
IsoD make_sigma(const DefParamD &param, FlavorD flavor);

enum class TDirection { Forward, Inverse };
// Parameter rule of T and tau; n = 4 only.
DefParamD t_target(const DefParamD &param);
// Q = x^3 + a x^2 + b x + c, returned as (a, b, c).
std::array<CycScalar, 3> cubic_coeffs(const DefParamD &param);
IsoD make_T(const DefParamD &param, FlavorD flavor, TDirection dir = TDirection::Forward);

enum class ScalingFamily { R, P };
// R: mu = sign lambda^n, (lambda^2 x, mu lambda^-2 y, mu lambda^-1 z), gamma' = gamma/mu.
// P: (lambda^2 x, sign lambda^(n-2) y, sign lambda^(n-1) z), gamma = 0.
// Q'(x) = lambda^(-2(n-1)) Q(lambda^2 x) in both.
IsoD make_scaling(const DefParamD &param, const CycScalar &lambda, int sign, ScalingFamily family,
                  FlavorD flavor = FlavorD::Deformed);

ElemDQuant apply_iso_d(const IsoD &f, const ElemDQuant &e);
ElemDDef apply_iso_d(const IsoD &f, const ElemDDef &e);
// f o g; requires g.target == f.source.
IsoD compose_iso_d(const IsoD &f, const IsoD &g);

struct IsoDCertificate {
    bool homomorphism = false;
    // Deformed flavor only.
    std::optional<bool> poisson;
    std::vector<std::pair<std::string, std::string>> residuals;
    bool ok() const { return homomorphism && poisson.value_or(true); }
};
IsoDCertificate verify_iso_d(const IsoD &f);

struct S3Report {
    bool ok = false;
    // Parameters visited along the T orbit, starting at the input.
    std::vector<DefParamD> orbit;
    std::vector<std::pair<std::string, bool>> checks;
};
S3Report s3_check(const DefParamD &param, FlavorD flavor);

enum class AutKindD { Affine, Poisson, Quantized };

struct AutGroupD {
    AutKindD kind = AutKindD::Affine;
    std::string structure;
    // 0 when the group is infinite.
    long order = 0;
    std::vector<IsoD> generators;
    // Q = x^d Qt(x^m) with m maximal; m = 0 when Q is a monomial.
    int d = 0;
    int m = 0;
    bool complete = true;
    // Smallest cyclotomic index that suffices, when the session field is too small.
    int required_k = 0;
    std::string to_string() const;
};
AutGroupD classify_aut_d(const DefParamD &param, AutKindD kind);

// (d, m) with Q = x^d Qt(x^m), m maximal; m = 0 for a monomial.
std::pair<int, int> d_m_decomposition(const MPoly &Q);

// Poisson isomorphism D(p1) -> D(p2) built from sigma and tau, if one exists.
std::optional<IsoD> decide_iso_d_poisson(const DefParamD &p1, const DefParamD &p2);

} // namespace kleinian
