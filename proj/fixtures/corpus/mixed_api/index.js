var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  }
};
var res = {
  send: function (body) {
    print("response: " + body);
  }
};
function eval(code) {
  print("evaluating " + code);
  return 0;
}

function report(req) {
  var from = req.query.from;
  db.query("SELECT * FROM sales WHERE day >= '" + from + "'"); // expect: js-sqli-taint
}

function echo(req) {
  var msg = req.query.msg;
  res.send("echo: " + msg); // expect: js-xss-taint
}

function compute(expression) {
  return eval("(" + expression + ")"); // expect: js-eval-usage
}

var req = { query: { from: "2024-01-01", msg: "hello there" } };
report(req);
echo(req);
print("computed", compute("6 * 7"));
