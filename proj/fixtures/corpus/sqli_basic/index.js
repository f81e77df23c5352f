// user lookup by numeric id
var db = {
  query: function (sql) {
    print("query: " + sql);
    return ["alice"];
  }
};

function getUser(req) {
  var id = req.query.id;
  return db.query("SELECT name FROM users WHERE id = " + id); // expect: js-sqli-taint
}

var req = { query: { id: "7 OR 1=1" } };
print("rows", getUser(req).length);
