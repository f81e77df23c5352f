function eval(code) {
  print("evaluating " + code);
  return code.length;
}

function calculator(req) {
  var expression = req.query.expr;
  return eval(expression); // expect: js-eval-usage
}

function replay(log) {
  var total = 0;
  for (var i = 0; i < log.length; i += 1) {
    total += eval(log[i]); // expect: js-eval-usage
  }
  return total;
}

print("calc", calculator({ query: { expr: "1 + 2 * 3" } }));
print("replay", replay(["a + b", "c * d"]));
