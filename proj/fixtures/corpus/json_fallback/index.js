var db = {
  query: function (sql) {
    print("query: " + sql);
    return [];
  }
};
function eval(code) {
  print("parsing legacy payload " + code);
  return { id: 1 };
}

function parsePayload(text) {
  return eval("(" + text + ")"); // expect: js-eval-usage
}

function lookupTag(req) {
  var tag = req.params.tag;
  return db.query("SELECT * FROM tags WHERE label = '" + tag + "'"); // expect: js-sqli-taint
}

var payload = parsePayload("{ id: 1 }");
print("payload id", payload.id);
lookupTag({ params: { tag: "news' OR 'x'='x" } });
