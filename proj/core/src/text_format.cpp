#include "ordamalg/text_format.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "ordamalg/error.hpp"

namespace ordamalg {
namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::pair<std::string, std::string> split_arrow(const std::string& tok, std::size_t line) {
  auto pos = tok.find("->");
  if (pos == std::string::npos || pos == 0 || pos + 2 >= tok.size())
    fail(line, "expected 'x->y', got '" + tok + "'");
  return {tok.substr(0, pos), tok.substr(pos + 2)};
}

struct PendingStructure {
  std::size_t start_line = 0;
  std::string name;
  std::optional<std::vector<std::string>> elements;
  std::optional<std::vector<std::string>> linear;
  std::optional<std::vector<std::pair<std::string, std::string>>> pairs;
  std::size_t order_line = 0;
  struct Op {
    std::size_t line;
    std::string symbol;
    OpKind kind;
    std::vector<std::pair<std::string, std::string>> graph;
  };
  std::vector<Op> ops;

  Structure finish(std::size_t end_line) const {
    if (!elements) fail(end_line, "structure '" + name + "' has no elements line");
    if (!linear && !pairs) fail(end_line, "structure '" + name + "' has no order line");
    std::set<std::string> names;
    for (const auto& e : *elements) {
      if (!is_valid_element_name(e)) fail(start_line, "invalid element name '" + e + "'");
      if (!names.insert(e).second) fail(start_line, "duplicate element '" + e + "'");
    }
    auto known = [&](const std::string& e, std::size_t line) {
      if (!names.count(e)) fail(line, "unknown element '" + e + "'");
    };
    StructureBuilder b(name);
    b.elements(*elements);
    if (linear) {
      std::set<std::string> listed;
      for (const auto& e : *linear) {
        known(e, order_line);
        if (!listed.insert(e).second) fail(order_line, "element '" + e + "' listed twice");
      }
      if (listed.size() != names.size()) fail(order_line, "linear order must list every element");
      b.chain(*linear);
    } else {
      for (const auto& [x, y] : *pairs) {
        known(x, order_line);
        known(y, order_line);
        b.less(x, y);
      }
      b.linearity(Linearity::partial);
    }
    for (const auto& op : ops) {
      std::set<std::string> domain;
      for (const auto& [x, y] : op.graph) {
        known(x, op.line);
        known(y, op.line);
        if (!domain.insert(x).second)
          fail(op.line, "op '" + op.symbol + "' assigns '" + x + "' twice");
      }
      b.op(op.symbol, op.kind, op.graph);
    }
    try {
      return b.build();
    } catch (const Error& e) {
      fail(start_line, e.what());
    }
  }
};

}  // namespace

TextDocument parse_document(std::string_view text) {
  TextDocument doc;
  std::optional<PendingStructure> cur;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (!cur) {
      auto toks = tokens(line);
      if (toks[0] == "structure") {
        if (toks.size() != 2) fail(lineno, "expected 'structure <name>'");
        cur.emplace();
        cur->start_line = lineno;
        cur->name = toks[1];
      } else if (toks[0] == "map:") {
        NameMap m;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          auto [x, y] = split_arrow(toks[i], lineno);
          if (!m.emplace(x, y).second) fail(lineno, "map assigns '" + x + "' twice");
        }
        doc.maps.push_back(std::move(m));
      } else {
        fail(lineno, "expected 'structure <name>', got '" + std::string(line) + "'");
      }
      continue;
    }

    if (line == "end") {
      doc.structures.push_back(cur->finish(lineno));
      cur.reset();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(lineno, "unrecognized line '" + std::string(line) + "'");
    std::string_view head = trim(line.substr(0, colon));
    auto rest = tokens(line.substr(colon + 1));
    if (head == "elements") {
      if (cur->elements) fail(lineno, "second elements line");
      cur->elements = rest;
    } else if (head == "order") {
      if (cur->linear || cur->pairs) fail(lineno, "exactly one order line is allowed");
      cur->order_line = lineno;
      if (rest.empty()) fail(lineno, "order line needs 'linear' or 'pairs'");
      if (rest[0] == "linear") {
        cur->linear = std::vector<std::string>(rest.begin() + 1, rest.end());
      } else if (rest[0] == "pairs") {
        std::vector<std::pair<std::string, std::string>> ps;
        for (std::size_t i = 1; i < rest.size(); ++i) {
          const auto& t = rest[i];
          auto comma = t.find(',');
          if (t.size() < 5 || t.front() != '(' || t.back() != ')' || comma == std::string::npos)
            fail(lineno, "expected '(x,y)', got '" + t + "'");
          ps.emplace_back(t.substr(1, comma - 1), t.substr(comma + 1, t.size() - comma - 2));
        }
        cur->pairs = std::move(ps);
      } else {
        fail(lineno, "order line needs 'linear' or 'pairs', got '" + rest[0] + "'");
      }
    } else if (head.substr(0, 3) == "op " || head.substr(0, 3) == "op\t") {
      auto htoks = tokens(head);
      if (htoks.size() != 3 || htoks[2].rfind("kind=", 0) != 0)
        fail(lineno, "expected 'op <symbol> kind=<kind>:'");
      auto kind = parse_op_kind(std::string_view(htoks[2]).substr(5));
      if (!kind) fail(lineno, "unknown op kind '" + htoks[2].substr(5) + "'");
      if (!is_valid_symbol(htoks[1])) fail(lineno, "invalid op symbol '" + htoks[1] + "'");
      for (const auto& op : cur->ops)
        if (op.symbol == htoks[1]) fail(lineno, "op '" + htoks[1] + "' declared twice");
      PendingStructure::Op op{lineno, htoks[1], *kind, {}};
      for (const auto& t : rest) op.graph.push_back(split_arrow(t, lineno));
      cur->ops.push_back(std::move(op));
    } else {
      fail(lineno, "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (cur) fail(lineno, "structure '" + cur->name + "' is missing 'end'");
  return doc;
}

std::vector<Structure> parse_structures(std::string_view text) {
  return parse_document(text).structures;
}

Structure parse_structure(std::string_view text) {
  auto all = parse_structures(text);
  if (all.size() != 1)
    throw Error(ErrorCode::ParseError,
                "expected exactly one structure, found " + std::to_string(all.size()));
  return std::move(all.front());
}

TextDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + std::string(e.what()).substr(12));
  }
}

std::string serialize(const Structure& s) {
  std::ostringstream out;
  out << "structure " << (s.name().empty() ? "S" : s.name()) << '\n';
  out << "elements:";
  for (const auto& e : s.elements()) out << ' ' << e;
  out << '\n';
  if (s.is_linear() && s.order().is_total()) {
    out << "order: linear";
    for (ElemId i : s.ascending()) out << ' ' << s.element(i);
  } else {
    out << "order: pairs";
    for (const auto& [x, y] : s.order().reflexive_transitive_closure().covering_pairs())
      out << " (" << s.element(x) << ',' << s.element(y) << ')';
  }
  out << '\n';
  for (const auto& op : s.ops()) {
    out << "op " << op.symbol << " kind=" << to_string(op.kind) << ':';
    for (ElemId x = 0; x < static_cast<ElemId>(s.size()); ++x)
      if (op.defined(x)) out << ' ' << s.element(x) << "->" << s.element(op(x));
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string serialize_map(const NameMap& map) {
  std::ostringstream out;
  out << "map:";
  for (const auto& [k, v] : map) out << ' ' << k << "->" << v;
  out << '\n';
  return out.str();
}

}  // namespace ordamalg
