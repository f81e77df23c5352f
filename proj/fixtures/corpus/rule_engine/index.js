function exec(cmd) {
  print("exec: " + cmd);
  return 0;
}
function Function(arg, body) {
  print("rule body: " + body);
  return function (order) {
    return order.total > 100;
  };
}

function compileRule(expression) {
  return new Function("order", "return " + expression); // expect: js-new-function
}

function compileAction(expression) {
  return new Function("order", expression); // expect: js-new-function
}

function notify(req) {
  var target = req.query.target;
  exec("mail -s alert " + target); // expect: js-cmdi-taint
}

var bigOrder = compileRule("order.total > 100");
compileAction("order.flagged = true");
print("rule matched", bigOrder({ total: 250 }));
notify({ query: { target: "ops@example.com; rm -rf /" } });
