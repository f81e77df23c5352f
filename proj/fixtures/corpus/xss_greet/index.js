var res = {
  send: function (body) {
    print("response: " + body);
  }
};

function greet(req) {
  var name = req.query.name;
  res.send("<h1>Hello, " + name + "!</h1>"); // expect: js-xss-taint
}

greet({ query: { name: "<script>alert(1)</script>" } });
greet({ query: { name: "world" } });
