var db = {
  query: function (sql) {
    print("query: " + sql);
    return sql.length > 60 ? [1] : [];
  }
};

function eval(code) {
  print("restoring session " + code);
  return { user: "admin" };
}

function restoreSession(cookie) {
  return eval("(" + cookie + ")"); // expect: js-eval-usage
}

function login(req, res) {
  var user = req.query.user;
  var pass = req.query.pass;
  var sql = "SELECT * FROM accounts WHERE user = '" + user + "' AND pass = '" + pass + "'";
  var rows = db.query(sql); // expect: js-sqli-taint
  res.ok = rows.length === 1;
}

var res = { ok: false };
login({ query: { user: "admin", pass: "x' OR 'a'='a" } }, res);
print("logged in:", res.ok);
print("session user:", restoreSession("{ user: 'admin' }").user);
