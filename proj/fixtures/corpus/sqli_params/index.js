var db = {
  run: function (sql) {
    print("run: " + sql);
    return 1;
  }
};

function eval(code) {
  print("filter " + code);
  return true;
}

function applyFilter(expression) {
  return eval(expression); // expect: js-eval-usage
}

function deleteOrder(req) {
  var orderId = req.params.orderId;
  var changed = db.run("DELETE FROM orders WHERE id = '" + orderId + "'"); // expect: js-sqli-taint
  return changed;
}

function archive(req) {
  var table = "archive_" + req.params.year;
  db.run("INSERT INTO " + table + " SELECT * FROM orders"); // expect: js-sqli-taint
}

var req = { params: { orderId: "1' OR '1'='1", year: "2024" } };
print("deleted", deleteOrder(req));
archive(req);
print("filter result", applyFilter("order.total > 10"));
