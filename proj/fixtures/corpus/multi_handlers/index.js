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
function exec(command) {
  print("exec: " + command);
  return 0;
}

var routes = {
  product: function (req) {
    var sku = req.params.sku;
    db.query("SELECT * FROM products WHERE sku = '" + sku + "'"); // expect: js-sqli-taint
  },
  download: function (req) {
    var path = req.query.path;
    exec("cat /srv/files/" + path); // expect: js-cmdi-taint
  },
  welcome: function (req) {
    var visitor = req.query.visitor;
    res.send("Welcome back, " + visitor); // expect: js-xss-taint
  }
};

var req = { params: { sku: "A-100" }, query: { path: "../../etc/shadow", visitor: "Dana" } };
routes.product(req);
routes.download(req);
routes.welcome(req);
