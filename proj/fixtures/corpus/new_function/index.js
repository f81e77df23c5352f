function Function(args, body) {
  print("compiling body: " + body);
  return function (x) {
    return x * 2;
  };
}

function buildFilter(req) {
  var predicate = req.query.predicate;
  var filter = new Function("item", "return " + predicate); // expect: js-new-function
  return filter(21);
}

function compile(body) {
  return Function("value", body); // expect: js-new-function
}

print("filter", buildFilter({ query: { predicate: "item.price < 10" } }));
print("compiled", compile("return value + 1")(4));
