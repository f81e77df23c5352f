var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  },
  run: function (sql) {
    print("run: " + sql);
    return 0;
  }
};

function listOrders(req) {
  var customer = req.query.customer;
  db.query("SELECT * FROM orders WHERE customer = '" + customer + "'"); // expect: js-sqli-taint
}

function updateStatus(req) {
  var status = req.params.status;
  db.run("UPDATE orders SET status = '" + status + "'"); // expect: js-sqli-taint
}

var request = { query: { customer: "bob" }, params: { status: "shipped" } };
listOrders(request);
updateStatus(request);
print("done with orders");
