var res = {
  send: function (body) {
    print("response: " + body);
  }
};

function escapeHtml(value) {
  return String(value).split("<").join("&lt;").split(">").join("&gt;");
}

function results(req) {
  var query = req.query.q;
  res.send("<p>No results for " + query + "</p>"); // expect: js-xss-taint
}

function safeResults(req) {
  var shown = escapeHtml(req.query.q);
  res.send("<p>No results for " + shown + "</p>");
}

var req = { query: { q: "<img src=x onerror=alert(1)>" } };
results(req);
safeResults(req);
