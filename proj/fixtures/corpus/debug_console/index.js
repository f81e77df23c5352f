var res = {
  send: function (body) {
    print("response: " + body);
  }
};
var history = [];
function eval(code) {
  history.push(code);
  return "ok";
}

function runSnippet(snippet) {
  var wrapped = "try { " + snippet + " } catch (e) {}";
  return eval(wrapped); // expect: js-eval-usage
}

function inspect(req) {
  var expr = req.query.expr;
  res.send("<pre>" + expr + "</pre>"); // expect: js-xss-taint
}

print("snippet", runSnippet("listUsers()"));
inspect({ query: { expr: "<svg onload=alert(1)>" } });
print("history size", history.length);
