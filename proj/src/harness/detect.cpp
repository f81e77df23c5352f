#include "vdl/harness/detect.hpp"

#include <map>
#include <optional>
#include <set>

namespace vdl::harness {

using js::Node;
using js::NodeKind;
using obf::Technique;

std::vector<Technique> detectable_techniques() {
  return {Technique::CMP, Technique::CFF, Technique::DP, Technique::SA, Technique::SS};
}

namespace {

int non_blank_lines(const std::string& s) {
  int lines = 0;
  bool content = false;
  for (char c : s) {
    if (c == '\n') {
      if (content) ++lines;
      content = false;
    } else if (c != ' ' && c != '\t' && c != '\r') {
      content = true;
    }
  }
  return lines + (content ? 1 : 0);
}

bool layout_flag(const Node& program, const std::string& source) {
  int stmts = 0;
  js::walk(program, [&](const Node& n) {
    if (js::is_statement(n.kind) && !n.is(NodeKind::Block) && !n.is(NodeKind::Program)) ++stmts;
    return true;
  });
  const int lines = non_blank_lines(source);
  if (lines == 0) return false;
  return (lines == 1 && stmts >= 2) || stmts >= 3 * lines;
}

bool assigns(const Node& n, const std::string& name) {
  bool found = false;
  js::walk(n, [&](const Node& x) {
    if (x.is(NodeKind::Assign) && x.kids[0]->is(NodeKind::Identifier) && x.kids[0]->text == name &&
        x.kids[1]->is_number())
      found = true;
    return !found;
  });
  return found;
}

bool dispatcher_flag(const Node& program) {
  bool found = false;
  js::walk(program, [&](const Node& n) {
    if (found) return false;
    if (!n.is(NodeKind::While) || !n.kids[1]->is(NodeKind::Block)) return true;
    for (const auto& s : n.kids[1]->kids) {
      if (!s->is(NodeKind::Switch) || !s->kids[0]->is(NodeKind::Identifier)) continue;
      const std::string& d = s->kids[0]->text;
      int assigning = 0;
      for (std::size_t i = 1; i < s->kids.size(); ++i)
        if (assigns(*s->kids[i], d)) ++assigning;
      if (assigning >= 2) found = true;
    }
    return true;
  });
  return found;
}

bool debugger_flag(const Node& program) {
  int debuggers = 0, functions = 0;
  js::walk(program, [&](const Node& n) {
    if (n.is(NodeKind::DebuggerStmt)) ++debuggers;
    if (js::is_function(n.kind)) ++functions;
    return true;
  });
  return debuggers > 0 && 2 * debuggers >= functions + 1;
}

bool string_array_flag(const Node& program) {
  std::set<std::string> arrays;
  js::walk(program, [&](const Node& n) {
    if (n.is(NodeKind::Declarator) && !n.kids.empty() && n.kids[0]->is(NodeKind::ArrayLiteral) &&
        !n.kids[0]->kids.empty()) {
      bool all_strings = true;
      for (const auto& e : n.kids[0]->kids) all_strings = all_strings && e && e->is_string();
      if (all_strings) arrays.insert(n.text);
    }
    return true;
  });
  if (arrays.empty()) return false;
  bool found = false;
  js::walk(program, [&](const Node& n) {
    if (n.is(NodeKind::Member) && n.computed && n.kids[0]->is(NodeKind::Identifier) &&
        arrays.count(n.kids[0]->text)) {
      const Node& idx = *n.kids[1];
      if (idx.is(NodeKind::Binary) && idx.text == "%" && idx.kids[0]->is(NodeKind::Binary) &&
          idx.kids[0]->text == "+")
        found = true;
    }
    return !found;
  });
  return found;
}

void chain_leaves(const Node& n, std::vector<const Node*>& out) {
  if (n.is(NodeKind::Binary) && n.text == "+") {
    chain_leaves(*n.kids[0], out);
    chain_leaves(*n.kids[1], out);
  } else {
    out.push_back(&n);
  }
}

using StringTable = std::map<std::string, std::vector<std::string>>;

StringTable string_arrays(const Node& program) {
  StringTable arrays;
  js::walk(program, [&](const Node& n) {
    if (n.is(NodeKind::Declarator) && !n.kids.empty() && n.kids[0]->is(NodeKind::ArrayLiteral)) {
      std::vector<std::string> entries;
      for (const auto& e : n.kids[0]->kids) {
        if (!e || !e->is_string()) return true;
        entries.push_back(e->text);
      }
      arrays[n.text] = std::move(entries);
    }
    return true;
  });
  return arrays;
}

// function f(i) { return arr[(i + n) % m]; }
struct Decoder {
  const std::vector<std::string>* entries = nullptr;
  long shift = 0;
  long modulus = 1;
};

std::map<std::string, Decoder> decoders(const Node& program, const StringTable& arrays) {
  std::map<std::string, Decoder> out;
  js::walk(program, [&](const Node& n) {
    if (!n.is(NodeKind::FunctionDecl) || n.params.size() != 1) return true;
    const Node* body = n.kid(0);
    const Node* ret = nullptr;
    for (const auto& st : body->kids) {
      if (st->is(NodeKind::DebuggerStmt)) continue;
      if (ret) return true;
      ret = st.get();
    }
    if (!ret || !ret->is(NodeKind::Return)) return true;
    const Node* m = ret->kid(0);
    if (!m || !m->is(NodeKind::Member) || !m->computed || !m->kids[0]->is(NodeKind::Identifier)) return true;
    auto arr = arrays.find(m->kids[0]->text);
    const Node* mod = m->kid(1);
    if (arr == arrays.end() || !mod->is(NodeKind::Binary) || mod->text != "%" || !mod->kids[1]->is_number())
      return true;
    const Node* sum = mod->kids[0].get();
    if (!sum->is(NodeKind::Binary) || sum->text != "+" || !sum->kids[0]->is(NodeKind::Identifier) ||
        sum->kids[0]->text != n.params[0] || !sum->kids[1]->is_number())
      return true;
    const long modulus = static_cast<long>(mod->kids[1]->number);
    if (modulus <= 0) return true;
    out[n.text] = Decoder{&arr->second, static_cast<long>(sum->kids[1]->number), modulus};
    return true;
  });
  return out;
}

// The string a leaf stands for: a literal, or a decoder call with a constant index.
std::optional<std::string> leaf_string(const Node& leaf, const std::map<std::string, Decoder>& decs) {
  if (leaf.is_string()) return leaf.text;
  if (!leaf.is(NodeKind::Call) || leaf.kids.size() != 2 || !leaf.kids[0]->is(NodeKind::Identifier) ||
      !leaf.kids[1]->is_number())
    return std::nullopt;
  auto it = decs.find(leaf.kids[0]->text);
  if (it == decs.end()) return std::nullopt;
  const Decoder& d = it->second;
  const long i = (static_cast<long>(leaf.kids[1]->number) + d.shift) % d.modulus;
  if (i < 0 || static_cast<std::size_t>(i) >= d.entries->size()) return std::nullopt;
  return (*d.entries)[static_cast<std::size_t>(i)];
}

std::size_t code_points(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

bool split_chain(const std::vector<std::string>& parts) {
  if (parts.size() < 3) return false;
  const std::size_t len = code_points(parts[0]);
  if (len == 0) return false;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (code_points(parts[i]) != len) return false;
  return code_points(parts.back()) <= len;
}

bool split_flag(const Node& program) {
  const auto arrays = string_arrays(program);
  const auto decs = decoders(program, arrays);
  bool found = false;
  js::walk(program, [&](const Node& n) {
    if (found) return false;
    if (n.is(NodeKind::Binary) && n.text == "+") {
      std::vector<const Node*> leaves;
      chain_leaves(n, leaves);
      std::vector<std::string> parts;
      for (const Node* l : leaves) {
        auto s = leaf_string(*l, decs);
        if (!s) break;
        parts.push_back(std::move(*s));
      }
      if (parts.size() == leaves.size() && split_chain(parts)) found = true;
    }
    return true;
  });
  return found;
}

}  // namespace

Detection detect_obfuscation(const Node& program, const std::string& source) {
  Detection d;
  d.flags[Technique::CMP] = layout_flag(program, source);
  d.flags[Technique::CFF] = dispatcher_flag(program);
  d.flags[Technique::DP] = debugger_flag(program);
  d.flags[Technique::SA] = string_array_flag(program);
  d.flags[Technique::SS] = split_flag(program);
  int raised = 0;
  for (const auto& [t, on] : d.flags) raised += on ? 1 : 0;
  d.score = static_cast<double>(raised) / static_cast<double>(d.flags.size());
  return d;
}

}  // namespace vdl::harness
