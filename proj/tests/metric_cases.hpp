#pragma once

namespace vdl::test {

struct MetricSnippet {
  const char* source;
  int cc;
  int n1;
  int n2;
};

// Operators: if/while/do/for/switch/return, every binary, unary, assignment and
// conditional operator, call, new, member access, and an initialised declarator.
// Operands: identifiers, literals, declared names and dot property names.
// Nested function bodies belong to their own function.
inline const MetricSnippet kMetricSnippets[] = {
    {"function f() { }", 1, 0, 0},
    {"function f(a, b) { return a + b; }", 1, 2, 2},
    {"function f(x) { if (x > 0) { return 1; } return 0; }", 2, 4, 4},
    {"function f(a, b) { return a && b || !a; }", 3, 4, 3},
    {"function f(n) { var s = 0; for (var i = 0; i < n; i += 1) { s += i; } return s; }", 2, 7, 11},
    {"function f(k) { switch (k) { case 1: return \"a\"; case 2: return \"b\"; default: return \"c\"; } }", 3, 4, 6},
    {"function f(o) { return o.a.b + o[\"c\"]; }", 1, 5, 5},
    {"function f(x) { var y = x ? 1 : 2; while (y < 10) { y = y * 2; } return y; }", 3, 7, 10},
    {"function f(items) { var out = new Thing(); items.forEach(function (it) { out.push(it); }); return out; }", 1, 5, 5},
    {"function f(a) { do { a = a - 1; } while (a > 0 && a !== 5); print(typeof a, -a); return; }", 3, 10, 10},
};

}  // namespace vdl::test
