#ifndef CAUSALID_RENDER_HPP
#define CAUSALID_RENDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "causalid/expr.hpp"

namespace causalid {

enum class RenderFormat { text, latex, json };

std::optional<RenderFormat> parse_render_format(std::string_view name);

/// Largest tree expansion render() will print.
inline constexpr std::size_t kMaxRenderNodes = 2'000'000;

/// `names[id]` names variable `id`. Text and LaTeX print values in lower
/// case, P(y|x,z) style, and prime any binder that shadows an enclosing one.
/// JSON is a lossless tree:
///
///   {"kind":"one"}
///   {"kind":"factor","var":"Y","given":["X"]}
///   {"kind":"product","terms":[...]}
///   {"kind":"sum","over":["A"],"body":{...}}
///   {"kind":"quotient","numerator":{...},"denominator":{...}}
///
/// Any node may carry "q_scope":[...] marking it as a Q-factor. Throws
/// RenderSizeError when the tree expansion exceeds kMaxRenderNodes.
std::string render(const Expr& e, std::span<const std::string> names, RenderFormat format);

/// Inverse of render(e, names, RenderFormat::json). Throws ParseError.
Expr parse_expr_json(std::string_view json, std::span<const std::string> names);

}  // namespace causalid

#endif  // CAUSALID_RENDER_HPP
