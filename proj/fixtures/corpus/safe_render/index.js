var res = {
  send: function (body) {
    print("response: " + body);
  }
};
var widget = { innerHTML: "" };

function escapeHtml(value) {
  return String(value).split("<").join("&lt;").split(">").join("&gt;");
}

function show(req) {
  var name = escapeHtml(req.query.name);
  res.send("<span>" + name + "</span>");
}

widget.innerHTML = "<em>" + "static banner" + "</em>";
show({ query: { name: "<b>visitor</b>" } });
print(widget.innerHTML);
