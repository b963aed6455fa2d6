#pragma once

#include <string>
#include <string_view>

#include "hamvf/exp_poly.hpp"
#include "hamvf/problem.hpp"

/// Text forms used by run configuration files.
///
///   term list    := term ("," term)*
///   term         := [sign] factor ("*" factor)*
///   factor       := rational | var ["^" k] | "exp(" [int ["*"]] var ")" | "e^" var | "e^(" ... ")"
///   var          := "t" | "s"
///
/// Whitespace is ignored. Parse failures throw InvalidArgument with the reason.
namespace hamvf::text {

ExpPoly parse_term_list(std::string_view text);

/// Semicolon-separated parts, each "gterms|hterms" or a single product term whose
/// t-factors form g(t) and s-factors form h(s) (e.g. "t*s").
SeparableKernel parse_kernel(std::string_view text);

/// Comma list of "coeff*u^deg" (also "u", "-u^2", "3").
PowerNonlinearity parse_nonlinearity(std::string_view text);

/// Inverse of parse_term_list ("0" for the zero function).
std::string render_term_list(const ExpPoly& p);
std::string render_kernel(const SeparableKernel& kernel);
std::string render_nonlinearity(const PowerNonlinearity& f);

}  // namespace hamvf::text
