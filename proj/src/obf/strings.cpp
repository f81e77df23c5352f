#include <map>

#include "vdl/obf/names.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

using js::Node;
using js::NodeKind;
using js::NodePtr;

namespace {

std::vector<std::string> split_code_points(const std::string& s, std::size_t chunk) {
  std::vector<std::string> out;
  std::string cur;
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    cur.append(s, i, len);
    i += len;
    if (++count == chunk) {
      out.push_back(std::move(cur));
      cur.clear();
      count = 0;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <typename F>
void replace_strings(Node& n, F&& replace) {
  for (auto& k : n.kids) {
    if (!k) continue;
    if (k->is_string()) {
      if (NodePtr r = replace(*k)) k = std::move(r);
    } else {
      replace_strings(*k, replace);
    }
  }
}

}  // namespace

void literalize_members(Node& root) {
  js::walk_mut(root, [](Node& n) {
    if (n.is(NodeKind::Member) && !n.computed) {
      n.computed = true;
      n.kids.push_back(js::make_string(std::move(n.text), n.span));
      n.text.clear();
    }
    return true;
  });
}

NodePtr tf_split_strings(const Node& program, Rng&, const ObfuscationParams& params) {
  auto out = program.clone();
  literalize_members(*out);
  const auto chunk = static_cast<std::size_t>(params.ss_chunk_len);
  replace_strings(*out, [chunk](const Node& lit) -> NodePtr {
    auto parts = split_code_points(lit.text, chunk);
    if (parts.size() < 2) return nullptr;
    NodePtr expr = js::make_string(std::move(parts[0]), lit.span);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      expr = js::make_binary("+", std::move(expr), js::make_string(std::move(parts[i]), lit.span));
      expr->span = lit.span;
    }
    return expr;
  });
  return out;
}

NodePtr tf_string_array(const Node& program, Rng& rng, const ObfuscationParams& params,
                        StringArrayTable* table) {
  auto out = program.clone();
  literalize_members(*out);

  std::vector<std::string> entries;
  std::map<std::string, std::size_t> first_seen;
  js::walk(*out, [&](const Node& n) {
    if (n.is_string() && first_seen.emplace(n.text, entries.size()).second) entries.push_back(n.text);
    return true;
  });
  if (entries.empty()) return out;

  rng.shuffle(entries);
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < entries.size(); ++i) slot[entries[i]] = i;

  NameGen names(*out, rng);
  const std::string array_name = names.fresh();
  const std::string decoder = names.fresh();
  const auto len = static_cast<std::int64_t>(entries.size());
  const std::int64_t shift = params.sa_index_shift;

  replace_strings(*out, [&](const Node& lit) -> NodePtr {
    const auto idx = static_cast<std::int64_t>(slot.at(lit.text));
    const std::int64_t k = ((idx - shift) % len + len) % len;
    std::vector<NodePtr> args;
    args.push_back(js::make_number(static_cast<double>(k), lit.span));
    auto call = js::make_call(js::make_ident(decoder, lit.span), std::move(args));
    call->span = lit.span;
    return call;
  });

  auto array = js::make(NodeKind::ArrayLiteral);
  for (const auto& e : entries) array->kids.push_back(js::make_string(e));
  auto fn = js::make(NodeKind::FunctionDecl);
  fn->text = decoder;
  fn->params = {"i"};
  auto ret = js::make(NodeKind::Return);
  ret->kids.push_back(js::make_index(
      js::make_ident(array_name),
      js::make_binary("%", js::make_binary("+", js::make_ident("i"), js::make_number(static_cast<double>(shift))),
                      js::make_number(static_cast<double>(len)))));
  std::vector<NodePtr> body;
  body.push_back(std::move(ret));
  fn->kids.push_back(js::make_block(std::move(body)));

  out->kids.insert(out->kids.begin(), std::move(fn));
  out->kids.insert(out->kids.begin(), js::make_var("var", array_name, std::move(array)));

  if (table) *table = StringArrayTable{array_name, decoder, entries, params.sa_index_shift};
  return out;
}

}  // namespace vdl::obf
