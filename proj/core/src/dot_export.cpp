#include "ordamalg/dot_export.hpp"

#include <algorithm>

namespace ordamalg {

namespace {

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char ch : id) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Structure& s) {
  std::string out = "digraph " + quoted(s.name()) + " {\n";
  for (const auto& e : s.elements()) out += "  " + quoted(e) + ";\n";
  auto covers = s.order().covering_pairs();
  std::sort(covers.begin(), covers.end());
  for (const auto& [x, y] : covers)
    out += "  " + quoted(s.element(x)) + " -> " + quoted(s.element(y)) + ";\n";
  for (const auto& op : s.ops())
    for (ElemId x = 0; x < static_cast<ElemId>(s.size()); ++x)
      if (op.defined(x))
        out += "  " + quoted(s.element(x)) + " -> " + quoted(s.element(op(x))) +
               " [style=dashed, label=" + quoted(op.symbol) + "];\n";
  return out + "}\n";
}

}  // namespace ordamalg
