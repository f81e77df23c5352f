var cells = { A1: "2", A2: "3", A3: "A1 * A2" };
function eval(code) {
  print("formula: " + code);
  return code.length;
}
function Function(arg, body) {
  return function (x) {
    return x * 2;
  };
}

function cellValue(sheet, name) {
  return eval(sheet[name]); // expect: js-eval-usage
}

function recompute(sheet, names) {
  var out = [];
  for (var i = 0; i < names.length; i += 1) {
    out.push(eval("(" + sheet[names[i]] + ")")); // expect: js-eval-usage
  }
  return out;
}

function customFunction(body) {
  return Function("x", body); // expect: js-new-function
}

print("cell A3", cellValue(cells, "A3"));
print("recomputed", recompute(cells, ["A1", "A2"]).join(","));
print("custom", customFunction("return x * 2")(21));
