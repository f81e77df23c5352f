var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  }
};

function sanitize(value) {
  return String(value).split("'").join("''");
}

function findByEmail(req) {
  var email = sanitize(req.query.email);
  db.query("SELECT id FROM users WHERE email = '" + email + "'");
}

function countAll() {
  var table = "customers";
  return db.query("SELECT COUNT(*) FROM " + table).length;
}

findByEmail({ query: { email: "o'hara@example.com" } });
print("count rows:", countAll());
