var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  }
};

function openSession() {
  var dbPassword = "passwd=correct-horse-battery"; // expect: js-hardcoded-secret
  return dbPassword.length;
}

function findInvoice(req) {
  var invoice = req.query.invoice;
  db.query("SELECT * FROM invoices WHERE number = " + invoice); // expect: js-sqli-taint
}

print("session", openSession());
findInvoice({ query: { invoice: "42 UNION SELECT card FROM payments" } });
