#pragma once

#include "kleinian/aut_type_a.hpp"
#include "kleinian/iso_type_d.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kleinian {

enum class SessionMode { Deformation, Quantization, TFamily };

struct Session {
    char family = 'A';
    std::optional<DefParamA> a;
    std::optional<DefParamD> d;
    int k = 4;
    SessionMode mode = SessionMode::Deformation;

    // deformation -> t = 0, quantization -> t = 1, t-family -> symbolic t.
    TMode tmode() const;
    const DefParamA &param_a() const;
    const DefParamD &param_d() const;
};

// Deformation A, A_t(P) (any t mode), deformation D, quantization D.
using Element = std::variant<ElemADef, GwaElem, ElemDDef, ElemDQuant>;

// Parses in the session algebra; in the noncommutative modes products are
// read left to right and normal ordered.
Element parse_element(const Session &s, const std::string &text);
std::string element_text(const Element &e);

nlohmann::json scalar_json(const CycScalar &c);
CycScalar scalar_from_json(const nlohmann::json &j);
nlohmann::json poly_json(const MPoly &p);
MPoly poly_from_json(const nlohmann::json &j);
nlohmann::json element_json(const Element &e);
Element element_from_json(const Session &s, const nlohmann::json &j);

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// args excludes the program name.
CommandResult run_command(const std::vector<std::string> &args);

} // namespace kleinian
