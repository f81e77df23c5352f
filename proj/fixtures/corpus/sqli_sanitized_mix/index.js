var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  }
};

function sanitize(value) {
  return String(value).split("'").join("''");
}

function search(req) {
  var term = sanitize(req.query.term);
  db.query("SELECT * FROM items WHERE title LIKE '%" + term + "%'");
}

function sortBy(req) {
  var column = req.query.sort;
  db.query("SELECT * FROM items ORDER BY " + column); // expect: js-sqli-taint
}

var req = { query: { term: "o'neil", sort: "price; DROP TABLE items" } };
search(req);
sortBy(req);
