var res = {
  send: function (body) {
    print("response: " + body);
  }
};
function Function(arg, body) {
  print("compiling template: " + body);
  return function (value) {
    return "<li>" + value + "</li>";
  };
}

function compileTemplate(source) {
  return new Function("value", "return " + source); // expect: js-new-function
}

function preview(req) {
  var title = req.query.title;
  res.send("<h2>" + title + "</h2>"); // expect: js-xss-taint
}

var item = compileTemplate("'<li>' + value + '</li>'");
print(item("first entry"));
preview({ query: { title: "<script>x()</script>" } });
