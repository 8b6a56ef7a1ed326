#pragma once

#include "qtype/contact.hpp"
#include "qtype/gaussian.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtype {

// Input documents:
//   vars z1 z2 z3;          declared variables (required, first)
//   param t;                curve document: one component per line in t
//   at 1, 0, i;             optional base point (ideal / hypersurface)
//   h: 2*z3                 hypersurface sections (comma-separated lists)
//   f: z1, z2
//   g:
// Otherwise each statement is a polynomial generator. Statements end at a
// newline or ';'; '#' starts a comment.
struct SourceDocument {
    enum class Kind { ideal, curve, hypersurface };

    Kind kind = Kind::ideal;
    std::vector<std::string> variables;
    std::string parameter;
    std::vector<GaussianRational> base_point;
    // Ideal generators, or curve components as polynomials in the parameter.
    std::vector<PolyC> expressions;
    std::optional<PolyC> h;
    std::vector<PolyC> f;
    std::vector<PolyC> g;

    int nvars() const { return static_cast<int>(variables.size()); }
    IdealPresentation ideal() const;
    CurveGerm curve(int truncation = default_truncation) const;
    HypersurfaceGerm hypersurface() const;
};

std::string_view kind_name(SourceDocument::Kind kind);

// Throws ParseError with the line and column of the offending token.
SourceDocument parse_document(std::string_view text);
PolyC parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace qtype
