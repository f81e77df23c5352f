#include "vdl/js/interp.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <unordered_map>

#include "regex.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/js/unicode.hpp"

namespace vdl::js {

namespace {

struct HeapObject;

enum class Type { Undefined, Null, Boolean, Number, String, Object };

struct Value {
  Type type = Type::Undefined;
  bool b = false;
  double n = 0;
  std::u16string s;
  HeapObject* obj = nullptr;

  static Value undefined() { return {}; }
  static Value null() {
    Value v;
    v.type = Type::Null;
    return v;
  }
  static Value boolean(bool x) {
    Value v;
    v.type = Type::Boolean;
    v.b = x;
    return v;
  }
  static Value number(double x) {
    Value v;
    v.type = Type::Number;
    v.n = x;
    return v;
  }
  static Value string(std::u16string x) {
    Value v;
    v.type = Type::String;
    v.s = std::move(x);
    return v;
  }
  static Value object(HeapObject* o) {
    Value v;
    v.type = Type::Object;
    v.obj = o;
    return v;
  }
};

class Interp;
struct Scope;

using NativeFn = std::function<Value(Interp&, const Value& self, std::vector<Value>& args, const Node& site)>;

struct HeapObject {
  enum class Kind { Plain, Array, Function, Native, RegExp } kind = Kind::Plain;
  std::vector<std::pair<std::u16string, Value>> props;  // insertion ordered
  std::vector<Value> elements;                          // Array
  const Node* function = nullptr;                       // Function
  std::shared_ptr<Scope> closure;                       // Function
  NativeFn native;                                      // Native
  std::unique_ptr<detail::Regex> regex;                 // RegExp

  Value* find(const std::u16string& key) {
    for (auto& [k, v] : props)
      if (k == key) return &v;
    return nullptr;
  }
  void set(const std::u16string& key, Value v) {
    if (Value* slot = find(key))
      *slot = std::move(v);
    else
      props.emplace_back(key, std::move(v));
  }
  bool callable() const { return kind == Kind::Function || kind == Kind::Native; }
};

struct Binding {
  Value value;
  bool constant = false;
};

struct Scope {
  std::unordered_map<std::string, Binding> vars;
  std::shared_ptr<Scope> parent;

  Binding* lookup(const std::string& name) {
    for (Scope* s = this; s; s = s->parent.get()) {
      auto it = s->vars.find(name);
      if (it != s->vars.end()) return &it->second;
    }
    return nullptr;
  }
};

struct BudgetExceeded {};

enum class Flow { Normal, Break, Continue, Return };

constexpr int kMaxCallDepth = 400;

std::u16string u16(std::string_view s) { return utf8_to_utf16(s); }

bool is_array_index(const std::u16string& key, std::size_t& out) {
  if (key.empty() || key.size() > 10) return false;
  if (key.size() > 1 && key[0] == u'0') return false;
  std::size_t v = 0;
  for (char16_t c : key) {
    if (c < u'0' || c > u'9') return false;
    v = v * 10 + static_cast<std::size_t>(c - u'0');
  }
  if (v >= 4294967295u) return false;
  out = v;
  return true;
}

bool has_lexical_decl(const std::vector<NodePtr>& stmts, std::size_t from = 0) {
  for (std::size_t i = from; i < stmts.size(); ++i) {
    const Node* s = stmts[i].get();
    if (s->is(NodeKind::FunctionDecl)) return true;
    if (s->is(NodeKind::VarDecl) && s->text != "var") return true;
  }
  return false;
}

// var-declared names and function declarations owned by a function body,
// without descending into nested functions.
void collect_var_names(const Node& n, std::vector<std::string>& out) {
  if (n.is(NodeKind::FunctionExpr)) return;
  if (n.is(NodeKind::FunctionDecl)) return;
  if (n.is(NodeKind::VarDecl) && n.text == "var")
    for (const auto& d : n.kids) out.push_back(d->text);
  for (const auto& k : n.kids)
    if (k) collect_var_names(*k, out);
}

class Interp {
 public:
  Interp(const Node& program, const EvalOptions& opts) : program_(program), opts_(opts) {
    rng_state_ = opts.seed ^ 0x9E3779B97F4A7C15ull;
    global_ = std::make_shared<Scope>();
    install_globals();
  }

  Trace run() {
    Trace t;
    try {
      hoist(program_.kids, global_, true);
      for (const auto& s : program_.kids) {
        Flow f = exec(*s, global_);
        (void)f;
      }
      if (Binding* main = global_->vars.count("main") ? &global_->vars["main"] : nullptr;
          main && main->value.type == Type::Object && main->value.obj->callable()) {
        std::vector<Value> args;
        last_value_ = call(main->value, Value::undefined(), args, program_);
        have_last_ = true;
      }
      t.result = have_last_ ? repr(last_value_) : "undefined";
    } catch (const BudgetExceeded&) {
      t.halted = true;
    }
    t.output = std::move(output_);
    t.steps = steps_;
    return t;
  }

  // ---- conversions ----

  std::u16string to_string(const Value& v) {
    switch (v.type) {
      case Type::Undefined: return u"undefined";
      case Type::Null: return u"null";
      case Type::Boolean: return v.b ? u"true" : u"false";
      case Type::Number: return u16(number_to_string(v.n));
      case Type::String: return v.s;
      case Type::Object: {
        HeapObject* o = v.obj;
        switch (o->kind) {
          case HeapObject::Kind::Array: return join(*o, u",");
          case HeapObject::Kind::Function:
          case HeapObject::Kind::Native: return u"function () { [code] }";
          case HeapObject::Kind::RegExp: return u"/" + o->regex->source() + u"/";
          case HeapObject::Kind::Plain: return u"[object Object]";
        }
      }
    }
    return u"";
  }

  std::u16string join(HeapObject& arr, const std::u16string& sep) {
    std::u16string out;
    for (std::size_t i = 0; i < arr.elements.size(); ++i) {
      if (i) out += sep;
      const Value& e = arr.elements[i];
      if (e.type != Type::Undefined && e.type != Type::Null) out += to_string(e);
    }
    return out;
  }

  static double string_to_number(const std::u16string& s16) {
    std::string s = utf16_to_utf8(s16);
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; };
    std::size_t b = 0, e = s.size();
    while (b < e && ws(s[b])) ++b;
    while (e > b && ws(s[e - 1])) --e;
    s = s.substr(b, e - b);
    if (s.empty()) return 0;
    if (s == "Infinity" || s == "+Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      double v = 0;
      for (std::size_t i = 2; i < s.size(); ++i) {
        char c = s[i];
        int d = (c >= '0' && c <= '9') ? c - '0' : (c >= 'a' && c <= 'f') ? c - 'a' + 10 : (c >= 'A' && c <= 'F') ? c - 'A' + 10 : -1;
        if (d < 0) return std::nan("");
        v = v * 16 + d;
      }
      return v;
    }
    // Decimal literal grammar only: digits, one dot, optional exponent.
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
    if (i < s.size() && s[i] == '.') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
    }
    if (!digits) return std::nan("");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
      bool exp_digits = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, exp_digits = true;
      if (!exp_digits) return std::nan("");
    }
    if (i != s.size()) return std::nan("");
    return std::strtod(s.c_str(), nullptr);
  }

  double to_number(const Value& v) {
    switch (v.type) {
      case Type::Undefined: return std::nan("");
      case Type::Null: return 0;
      case Type::Boolean: return v.b ? 1 : 0;
      case Type::Number: return v.n;
      case Type::String: return string_to_number(v.s);
      case Type::Object: return string_to_number(to_string(v));
    }
    return std::nan("");
  }

  static bool truthy(const Value& v) {
    switch (v.type) {
      case Type::Undefined:
      case Type::Null: return false;
      case Type::Boolean: return v.b;
      case Type::Number: return v.n != 0 && !std::isnan(v.n);
      case Type::String: return !v.s.empty();
      case Type::Object: return true;
    }
    return false;
  }

  Value to_primitive(const Value& v) {
    if (v.type != Type::Object) return v;
    return Value::string(to_string(v));
  }

  static bool strict_equals(const Value& a, const Value& b) {
    if (a.type != b.type) return false;
    switch (a.type) {
      case Type::Undefined:
      case Type::Null: return true;
      case Type::Boolean: return a.b == b.b;
      case Type::Number: return a.n == b.n;
      case Type::String: return a.s == b.s;
      case Type::Object: return a.obj == b.obj;
    }
    return false;
  }

  bool loose_equals(const Value& a, const Value& b) {
    if (a.type == b.type) return strict_equals(a, b);
    auto nullish = [](const Value& v) { return v.type == Type::Undefined || v.type == Type::Null; };
    if (nullish(a) || nullish(b)) return nullish(a) && nullish(b);
    if (a.type == Type::Object) return loose_equals(to_primitive(a), b);
    if (b.type == Type::Object) return loose_equals(a, to_primitive(b));
    return to_number(a) == to_number(b);
  }

  std::string repr(const Value& v, int depth = 0) {
    switch (v.type) {
      case Type::String: return quote_string(utf16_to_utf8(v.s));
      case Type::Object: {
        HeapObject* o = v.obj;
        if (depth > 4) return "...";
        if (o->kind == HeapObject::Kind::Array) {
          std::string out = "[";
          for (std::size_t i = 0; i < o->elements.size(); ++i) {
            if (i) out += ",";
            out += repr(o->elements[i], depth + 1);
          }
          return out + "]";
        }
        if (o->kind == HeapObject::Kind::Plain) {
          std::string out = "{";
          bool first = true;
          for (auto& [k, val] : o->props) {
            if (!first) out += ",";
            first = false;
            out += utf16_to_utf8(k) + ":" + repr(val, depth + 1);
          }
          return out + "}";
        }
        return utf16_to_utf8(to_string(v));
      }
      default: return utf16_to_utf8(to_string(v));
    }
  }

  // ---- heap ----

  HeapObject* alloc(HeapObject::Kind kind) {
    heap_.push_back(std::make_unique<HeapObject>());
    heap_.back()->kind = kind;
    return heap_.back().get();
  }

  Value native(NativeFn fn) {
    HeapObject* o = alloc(HeapObject::Kind::Native);
    o->native = std::move(fn);
    return Value::object(o);
  }

  Value new_array(std::vector<Value> elems) {
    HeapObject* a = alloc(HeapObject::Kind::Array);
    a->elements = std::move(elems);
    return Value::object(a);
  }

  void tick() {
    if (++steps_ > opts_.budget) throw BudgetExceeded{};
  }

  [[noreturn]] void fail(const Node& at, const std::string& msg) { throw RuntimeError(msg, at.span); }

  std::string self_text() {
    if (opts_.self_text) return *opts_.self_text;
    return print_program(program_);
  }

  double next_random() {
    rng_state_ = rng_state_ * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(rng_state_ >> 11) * 0x1.0p-53;
  }

 private:
  static double arg_number(Interp& in, std::vector<Value>& args, std::size_t i) {
    return i < args.size() ? in.to_number(args[i]) : std::nan("");
  }

  void define_global(const std::string& name, Value v) { global_->vars[name] = Binding{std::move(v), false}; }

  void install_globals() {
    define_global("undefined", Value::undefined());
    define_global("NaN", Value::number(std::nan("")));
    define_global("Infinity", Value::number(std::numeric_limits<double>::infinity()));
    define_global("print", native([](Interp& in, const Value&, std::vector<Value>& args, const Node&) {
      std::u16string line;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) line += u" ";
        line += in.to_string(args[i]);
      }
      in.output_.push_back(utf16_to_utf8(line));
      return Value::undefined();
    }));
    define_global("String", native([](Interp& in, const Value&, std::vector<Value>& args, const Node&) {
      return Value::string(args.empty() ? u"" : in.to_string(args[0]));
    }));
    define_global("Number", native([](Interp& in, const Value&, std::vector<Value>& args, const Node&) {
      return Value::number(args.empty() ? 0 : in.to_number(args[0]));
    }));
    define_global("rand", native([](Interp& in, const Value&, std::vector<Value>&, const Node&) {
      return Value::number(in.next_random());
    }));
    define_global("selfText", native([](Interp& in, const Value&, std::vector<Value>&, const Node&) {
      return Value::string(u16(in.self_text()));
    }));
    define_global("RegExp", native([](Interp& in, const Value&, std::vector<Value>& args, const Node& site) {
      std::u16string src = args.empty() ? u"(?:)" : in.to_string(args[0]);
      HeapObject* o = in.alloc(HeapObject::Kind::RegExp);
      try {
        o->regex = std::make_unique<detail::Regex>(src);
      } catch (const std::invalid_argument& e) {
        in.fail(site, std::string("invalid regular expression: ") + e.what());
      }
      return Value::object(o);
    }));
    HeapObject* math = alloc(HeapObject::Kind::Plain);
    math->set(u"floor", native([](Interp& in, const Value&, std::vector<Value>& args, const Node&) {
      return Value::number(std::floor(arg_number(in, args, 0)));
    }));
    math->set(u"abs", native([](Interp& in, const Value&, std::vector<Value>& args, const Node&) {
      return Value::number(std::fabs(arg_number(in, args, 0)));
    }));
    define_global("Math", Value::object(math));
    install_methods();
  }

  void install_methods() {
    auto method = [&](auto&& fn) { return native(std::forward<decltype(fn)>(fn)); };

    // String.prototype subset
    string_methods_[u"indexOf"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      std::u16string needle = args.empty() ? u"undefined" : in.to_string(args[0]);
      std::size_t from = 0;
      if (args.size() > 1) {
        double f = in.to_number(args[1]);
        from = std::isnan(f) || f < 0 ? 0 : static_cast<std::size_t>(std::min<double>(f, self.s.size()));
      }
      auto pos = self.s.find(needle, from);
      return Value::number(pos == std::u16string::npos ? -1 : static_cast<double>(pos));
    });
    string_methods_[u"slice"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      auto [b, e] = slice_bounds(in, args, self.s.size());
      return Value::string(self.s.substr(b, e > b ? e - b : 0));
    });
    string_methods_[u"split"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      std::vector<Value> parts;
      if (args.empty() || args[0].type == Type::Undefined) {
        parts.push_back(Value::string(self.s));
        return in.new_array(std::move(parts));
      }
      std::u16string sep = in.to_string(args[0]);
      if (sep.empty()) {
        for (char16_t c : self.s) parts.push_back(Value::string(std::u16string(1, c)));
        return in.new_array(std::move(parts));
      }
      std::size_t start = 0;
      for (;;) {
        auto pos = self.s.find(sep, start);
        if (pos == std::u16string::npos) break;
        parts.push_back(Value::string(self.s.substr(start, pos - start)));
        start = pos + sep.size();
      }
      parts.push_back(Value::string(self.s.substr(start)));
      return in.new_array(std::move(parts));
    });
    string_methods_[u"charCodeAt"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      double i = args.empty() ? 0 : std::trunc(in.to_number(args[0]));
      if (std::isnan(i)) i = 0;
      if (i < 0 || i >= static_cast<double>(self.s.size())) return Value::number(std::nan(""));
      return Value::number(self.s[static_cast<std::size_t>(i)]);
    });
    string_methods_[u"concat"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      std::u16string out = self.s;
      for (auto& a : args) out += in.to_string(a);
      return Value::string(std::move(out));
    });

    // Array.prototype subset
    array_methods_[u"push"] = method([](Interp&, const Value& self, std::vector<Value>& args, const Node&) {
      for (auto& a : args) self.obj->elements.push_back(a);
      return Value::number(static_cast<double>(self.obj->elements.size()));
    });
    array_methods_[u"join"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      std::u16string sep = args.empty() || args[0].type == Type::Undefined ? u"," : in.to_string(args[0]);
      return Value::string(in.join(*self.obj, sep));
    });
    array_methods_[u"slice"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      auto& el = self.obj->elements;
      auto [b, e] = slice_bounds(in, args, el.size());
      std::vector<Value> out;
      for (std::size_t i = b; i < e; ++i) out.push_back(el[i]);
      return in.new_array(std::move(out));
    });
    array_methods_[u"indexOf"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      Value needle = args.empty() ? Value::undefined() : args[0];
      auto& el = self.obj->elements;
      for (std::size_t i = 0; i < el.size(); ++i)
        if (in.strict_equals(el[i], needle)) return Value::number(static_cast<double>(i));
      return Value::number(-1);
    });

    regexp_methods_[u"test"] = method([](Interp& in, const Value& self, std::vector<Value>& args, const Node&) {
      std::u16string subject = args.empty() ? u"undefined" : in.to_string(args[0]);
      bool ok = self.obj->regex->test(subject, [&in] { in.tick(); });
      return Value::boolean(ok);
    });
  }

  static std::pair<std::size_t, std::size_t> slice_bounds(Interp& in, std::vector<Value>& args, std::size_t len) {
    auto clamp = [len](double v, double dflt) {
      if (std::isnan(v)) v = 0;
      if (std::isinf(v)) v = v > 0 ? static_cast<double>(len) : 0;
      if (v == dflt && dflt == static_cast<double>(len)) return len;
      v = std::trunc(v);
      if (v < 0) v = std::max(0.0, static_cast<double>(len) + v);
      return static_cast<std::size_t>(std::min(v, static_cast<double>(len)));
    };
    std::size_t b = args.empty() ? 0 : clamp(in.to_number(args[0]), 0);
    std::size_t e = args.size() < 2 || args[1].type == Type::Undefined ? len : clamp(in.to_number(args[1]), -1);
    return {b, e};
  }

  // ---- property access ----

  std::u16string property_key(const Value& v) { return to_string(v); }

  Value get_property(const Value& base, const std::u16string& key, const Node& site) {
    switch (base.type) {
      case Type::Undefined:
      case Type::Null:
        fail(site, "cannot read property '" + utf16_to_utf8(key) + "' of " + utf16_to_utf8(to_string(base)));
      case Type::String: {
        if (key == u"length") return Value::number(static_cast<double>(base.s.size()));
        std::size_t idx;
        if (is_array_index(key, idx)) {
          if (idx < base.s.size()) return Value::string(std::u16string(1, base.s[idx]));
          return Value::undefined();
        }
        auto it = string_methods_.find(key);
        return it != string_methods_.end() ? it->second : Value::undefined();
      }
      case Type::Object: {
        HeapObject* o = base.obj;
        if (o->kind == HeapObject::Kind::Array) {
          if (key == u"length") return Value::number(static_cast<double>(o->elements.size()));
          std::size_t idx;
          if (is_array_index(key, idx)) return idx < o->elements.size() ? o->elements[idx] : Value::undefined();
          auto it = array_methods_.find(key);
          if (it != array_methods_.end()) return it->second;
        } else if (o->kind == HeapObject::Kind::RegExp) {
          auto it = regexp_methods_.find(key);
          if (it != regexp_methods_.end()) return it->second;
        }
        if (Value* v = o->find(key)) return *v;
        return Value::undefined();
      }
      default:
        return Value::undefined();
    }
  }

  void set_property(const Value& base, const std::u16string& key, Value v, const Node& site) {
    if (base.type == Type::Undefined || base.type == Type::Null)
      fail(site, "cannot set property '" + utf16_to_utf8(key) + "' of " + utf16_to_utf8(to_string(base)));
    if (base.type != Type::Object) return;  // primitives ignore writes
    HeapObject* o = base.obj;
    if (o->kind == HeapObject::Kind::Array) {
      std::size_t idx;
      if (is_array_index(key, idx)) {
        if (idx >= o->elements.size()) o->elements.resize(idx + 1);
        o->elements[idx] = std::move(v);
        return;
      }
      if (key == u"length") {
        double n = to_number(v);
        if (n >= 0 && n == std::floor(n)) o->elements.resize(static_cast<std::size_t>(n));
        return;
      }
    }
    o->set(key, std::move(v));
  }

  // ---- scopes ----

  void hoist(const std::vector<NodePtr>& stmts, const std::shared_ptr<Scope>& scope, bool function_level) {
    if (function_level) {
      std::vector<std::string> names;
      for (const auto& s : stmts) collect_var_names(*s, names);
      for (const auto& n : names) scope->vars.try_emplace(n, Binding{});
    }
    for (const auto& s : stmts)
      if (s->is(NodeKind::FunctionDecl)) scope->vars[s->text] = Binding{make_closure(*s, scope), false};
  }

  static std::shared_ptr<Scope> new_scope(const std::shared_ptr<Scope>& parent) {
    auto s = std::make_shared<Scope>();
    s->parent = parent;
    return s;
  }

  Value make_closure(const Node& fn, std::shared_ptr<Scope> env) {
    HeapObject* o = alloc(HeapObject::Kind::Function);
    o->function = &fn;
    o->closure = std::move(env);
    return Value::object(o);
  }

  Binding& resolve(const std::string& name, Scope& scope, const Node& site) {
    if (Binding* b = scope.lookup(name)) return *b;
    fail(site, name + " is not defined");
  }

  // ---- statements ----

  Flow exec_list(const std::vector<NodePtr>& stmts, std::size_t from, const std::shared_ptr<Scope>& scope) {
    for (std::size_t i = from; i < stmts.size(); ++i) {
      Flow f = exec(*stmts[i], scope);
      if (f != Flow::Normal) return f;
    }
    return Flow::Normal;
  }

  Flow exec_block(const std::vector<NodePtr>& stmts, std::size_t from, const std::shared_ptr<Scope>& scope) {
    if (!has_lexical_decl(stmts, from)) return exec_list(stmts, from, scope);
    auto inner = new_scope(scope);
    for (std::size_t i = from; i < stmts.size(); ++i)
      if (stmts[i]->is(NodeKind::FunctionDecl))
        inner->vars[stmts[i]->text] = Binding{make_closure(*stmts[i], inner), false};
    return exec_list(stmts, from, inner);
  }

  Flow exec(const Node& s, const std::shared_ptr<Scope>& scope) {
    tick();
    switch (s.kind) {
      case NodeKind::FunctionDecl:
      case NodeKind::EmptyStmt:
      case NodeKind::DebuggerStmt:
        return Flow::Normal;
      case NodeKind::VarDecl:
        for (const auto& d : s.kids) {
          if (s.text == "var") {
            if (d->kids.empty()) continue;
            Value v = eval(*d->kids[0], scope);
            resolve(d->text, *scope, *d).value = std::move(v);
          } else {
            Value v = d->kids.empty() ? Value::undefined() : eval(*d->kids[0], scope);
            scope->vars[d->text] = Binding{std::move(v), s.text == "const"};
          }
        }
        return Flow::Normal;
      case NodeKind::Block:
        return exec_block(s.kids, 0, scope);
      case NodeKind::ExprStmt: {
        Value v = eval(*s.kids[0], scope);
        if (call_depth_ == 0) {
          last_value_ = std::move(v);
          have_last_ = true;
        }
        return Flow::Normal;
      }
      case NodeKind::If:
        if (truthy(eval(*s.kids[0], scope))) return exec(*s.kids[1], scope);
        if (const Node* alt = s.kid(2)) return exec(*alt, scope);
        return Flow::Normal;
      case NodeKind::While:
        while (truthy(eval(*s.kids[0], scope))) {
          Flow f = exec(*s.kids[1], scope);
          if (f == Flow::Break) break;
          if (f == Flow::Return) return f;
          tick();
        }
        return Flow::Normal;
      case NodeKind::DoWhile:
        do {
          Flow f = exec(*s.kids[0], scope);
          if (f == Flow::Break) break;
          if (f == Flow::Return) return f;
          tick();
        } while (truthy(eval(*s.kids[1], scope)));
        return Flow::Normal;
      case NodeKind::For: {
        std::shared_ptr<Scope> loop = scope;
        const Node* init = s.kid(0);
        if (init && init->is(NodeKind::VarDecl) && init->text != "var") loop = new_scope(scope);
        if (init) exec(*init, loop);
        for (;;) {
          if (const Node* test = s.kid(1); test && !truthy(eval(*test, loop))) break;
          Flow f = exec(*s.kids[3], loop);
          if (f == Flow::Break) break;
          if (f == Flow::Return) return f;
          if (const Node* update = s.kid(2)) eval(*update, loop);
          tick();
        }
        return Flow::Normal;
      }
      case NodeKind::Switch:
        return exec_switch(s, scope);
      case NodeKind::Return:
        return_value_ = s.kids.empty() ? Value::undefined() : eval(*s.kids[0], scope);
        return Flow::Return;
      case NodeKind::Break:
        return Flow::Break;
      case NodeKind::Continue:
        return Flow::Continue;
      default:
        fail(s, "unexpected node in statement position");
    }
  }

  Flow exec_switch(const Node& s, const std::shared_ptr<Scope>& scope) {
    Value disc = eval(*s.kids[0], scope);
    bool lexical = false;
    for (std::size_t i = 1; i < s.kids.size(); ++i)
      if (has_lexical_decl(s.kids[i]->kids, 1)) lexical = true;
    std::shared_ptr<Scope> body = lexical ? new_scope(scope) : scope;
    if (lexical) {
      for (std::size_t i = 1; i < s.kids.size(); ++i)
        for (std::size_t j = 1; j < s.kids[i]->kids.size(); ++j)
          if (s.kids[i]->kids[j]->is(NodeKind::FunctionDecl))
            body->vars[s.kids[i]->kids[j]->text] = Binding{make_closure(*s.kids[i]->kids[j], body), false};
    }
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.kids.size() && !start; ++i) {
      const Node* test = s.kids[i]->kid(0);
      if (test && strict_equals(disc, eval(*test, body))) start = i;
    }
    if (!start)
      for (std::size_t i = 1; i < s.kids.size(); ++i)
        if (!s.kids[i]->kid(0)) start = i;
    Flow result = Flow::Normal;
    if (start) {
      for (std::size_t i = start; i < s.kids.size(); ++i) {
        Flow f = exec_list(s.kids[i]->kids, 1, body);
        if (f == Flow::Break) break;
        if (f != Flow::Normal) {
          result = f;
          break;
        }
      }
    }
    return result;
  }

  // ---- expressions ----

 public:
  Value call(const Value& callee, const Value& self, std::vector<Value>& args, const Node& site) {
    if (callee.type != Type::Object || !callee.obj->callable()) fail(site, "value is not callable");
    HeapObject* fn = callee.obj;
    if (fn->kind == HeapObject::Kind::Native) return fn->native(*this, self, args, site);
    if (call_depth_ >= kMaxCallDepth) fail(site, "maximum call stack size exceeded");
    const Node& decl = *fn->function;
    auto scope = new_scope(fn->closure);
    for (std::size_t i = 0; i < decl.params.size(); ++i)
      scope->vars[decl.params[i]] = Binding{i < args.size() ? args[i] : Value::undefined(), false};
    if (decl.is(NodeKind::FunctionExpr) && !decl.text.empty() && !scope->vars.count(decl.text))
      scope->vars[decl.text] = Binding{callee, false};
    const Node& body = *decl.kids[0];
    hoist(body.kids, scope, true);
    ++call_depth_;
    Flow f;
    try {
      f = exec_list(body.kids, 0, scope);
    } catch (...) {
      --call_depth_;
      throw;
    }
    --call_depth_;
    if (f == Flow::Return) {
      Value r = std::move(return_value_);
      return_value_ = Value::undefined();
      return r;
    }
    return Value::undefined();
  }

 private:
  Value eval(const Node& e, const std::shared_ptr<Scope>& scope) {
    tick();
    switch (e.kind) {
      case NodeKind::Literal:
        switch (e.literal) {
          case LiteralType::Number: return Value::number(e.number);
          case LiteralType::String: return Value::string(u16(e.text));
          case LiteralType::Boolean: return Value::boolean(e.boolean);
          case LiteralType::Null: return Value::null();
        }
        break;
      case NodeKind::Identifier:
        return resolve(e.text, *scope, e).value;
      case NodeKind::ArrayLiteral: {
        std::vector<Value> elems;
        for (const auto& k : e.kids) elems.push_back(eval(*k, scope));
        return new_array(std::move(elems));
      }
      case NodeKind::ObjectLiteral: {
        HeapObject* o = alloc(HeapObject::Kind::Plain);
        for (std::size_t i = 0; i < e.kids.size(); ++i) o->set(u16(e.keys[i]), eval(*e.kids[i], scope));
        return Value::object(o);
      }
      case NodeKind::FunctionExpr:
        return make_closure(e, scope);
      case NodeKind::Member: {
        Value base = eval(*e.kids[0], scope);
        std::u16string key = e.computed ? property_key(eval(*e.kids[1], scope)) : u16(e.text);
        return get_property(base, key, e);
      }
      case NodeKind::Call: {
        const Node& callee = *e.kids[0];
        Value self;
        Value fn;
        if (callee.is(NodeKind::Member)) {
          self = eval(*callee.kids[0], scope);
          std::u16string key = callee.computed ? property_key(eval(*callee.kids[1], scope)) : u16(callee.text);
          fn = get_property(self, key, callee);
        } else {
          fn = eval(callee, scope);
        }
        std::vector<Value> args;
        for (std::size_t i = 1; i < e.kids.size(); ++i) args.push_back(eval(*e.kids[i], scope));
        return call(fn, self, args, e);
      }
      case NodeKind::New: {
        Value fn = eval(*e.kids[0], scope);
        std::vector<Value> args;
        for (std::size_t i = 1; i < e.kids.size(); ++i) args.push_back(eval(*e.kids[i], scope));
        if (fn.type == Type::Object && fn.obj->kind == HeapObject::Kind::Native) return call(fn, Value::undefined(), args, e);
        if (fn.type != Type::Object || fn.obj->kind != HeapObject::Kind::Function) fail(e, "value is not a constructor");
        Value r = call(fn, Value::undefined(), args, e);
        if (r.type == Type::Object) return r;
        return Value::object(alloc(HeapObject::Kind::Plain));
      }
      case NodeKind::Unary: {
        const std::string& op = e.text;
        if (op == "typeof") {
          const Node& arg = *e.kids[0];
          if (arg.is(NodeKind::Identifier) && !scope->lookup(arg.text)) return Value::string(u"undefined");
          return Value::string(type_of(eval(arg, scope)));
        }
        Value v = eval(*e.kids[0], scope);
        if (op == "!") return Value::boolean(!truthy(v));
        if (op == "-") return Value::number(-to_number(v));
        return Value::number(to_number(v));
      }
      case NodeKind::Binary:
        return binary(e, scope);
      case NodeKind::Conditional:
        return truthy(eval(*e.kids[0], scope)) ? eval(*e.kids[1], scope) : eval(*e.kids[2], scope);
      case NodeKind::Assign:
        return assign(e, scope);
      default:
        break;
    }
    fail(e, "unexpected node in expression position");
  }

  static std::u16string type_of(const Value& v) {
    switch (v.type) {
      case Type::Undefined: return u"undefined";
      case Type::Null: return u"object";
      case Type::Boolean: return u"boolean";
      case Type::Number: return u"number";
      case Type::String: return u"string";
      case Type::Object: return v.obj->callable() ? u"function" : u"object";
    }
    return u"undefined";
  }

  Value add(const Value& a0, const Value& b0) {
    Value a = to_primitive(a0);
    Value b = to_primitive(b0);
    if (a.type == Type::String || b.type == Type::String) return Value::string(to_string(a) + to_string(b));
    return Value::number(to_number(a) + to_number(b));
  }

  Value arithmetic(const std::string& op, const Value& a, const Value& b) {
    if (op == "+") return add(a, b);
    double x = to_number(a);
    double y = to_number(b);
    if (op == "-") return Value::number(x - y);
    if (op == "*") return Value::number(x * y);
    if (op == "/") return Value::number(x / y);
    return Value::number(std::fmod(x, y));
  }

  Value binary(const Node& e, const std::shared_ptr<Scope>& scope) {
    const std::string& op = e.text;
    if (op == "&&") {
      Value l = eval(*e.kids[0], scope);
      return truthy(l) ? eval(*e.kids[1], scope) : l;
    }
    if (op == "||") {
      Value l = eval(*e.kids[0], scope);
      return truthy(l) ? l : eval(*e.kids[1], scope);
    }
    Value l = eval(*e.kids[0], scope);
    Value r = eval(*e.kids[1], scope);
    if (op == "===") return Value::boolean(strict_equals(l, r));
    if (op == "!==") return Value::boolean(!strict_equals(l, r));
    if (op == "==") return Value::boolean(loose_equals(l, r));
    if (op == "!=") return Value::boolean(!loose_equals(l, r));
    if (op == "<" || op == ">" || op == "<=" || op == ">=") {
      Value a = to_primitive(l);
      Value b = to_primitive(r);
      if (a.type == Type::String && b.type == Type::String) {
        int c = a.s.compare(b.s);
        if (op == "<") return Value::boolean(c < 0);
        if (op == ">") return Value::boolean(c > 0);
        if (op == "<=") return Value::boolean(c <= 0);
        return Value::boolean(c >= 0);
      }
      double x = to_number(a);
      double y = to_number(b);
      if (op == "<") return Value::boolean(x < y);
      if (op == ">") return Value::boolean(x > y);
      if (op == "<=") return Value::boolean(x <= y);
      return Value::boolean(x >= y);
    }
    return arithmetic(op, l, r);
  }

  Value assign(const Node& e, const std::shared_ptr<Scope>& scope) {
    const Node& target = *e.kids[0];
    std::string op = e.text;
    std::string arith = op == "=" ? "" : op.substr(0, 1);
    if (target.is(NodeKind::Identifier)) {
      Binding& b = resolve(target.text, *scope, target);
      Value v = eval(*e.kids[1], scope);
      if (!arith.empty()) v = arithmetic(arith, b.value, v);
      if (b.constant) fail(e, "assignment to constant variable '" + target.text + "'");
      b.value = v;
      return v;
    }
    Value base = eval(*target.kids[0], scope);
    std::u16string key = target.computed ? property_key(eval(*target.kids[1], scope)) : u16(target.text);
    Value v = eval(*e.kids[1], scope);
    if (!arith.empty()) v = arithmetic(arith, get_property(base, key, target), v);
    set_property(base, key, v, target);
    return v;
  }

  const Node& program_;
  EvalOptions opts_;
  std::shared_ptr<Scope> global_;
  std::vector<std::unique_ptr<HeapObject>> heap_;
  std::unordered_map<std::u16string, Value> string_methods_;
  std::unordered_map<std::u16string, Value> array_methods_;
  std::unordered_map<std::u16string, Value> regexp_methods_;
  std::vector<std::string> output_;
  Value return_value_;
  Value last_value_;
  bool have_last_ = false;
  int call_depth_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t rng_state_ = 0;
};

}  // namespace

Trace evaluate(const Node& program, const EvalOptions& options) {
  Interp interp(program, options);
  return interp.run();
}

}  // namespace vdl::js
