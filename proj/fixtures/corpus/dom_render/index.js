var panel = { innerHTML: "", title: "" };
var footer = { innerHTML: "" };
function eval(code) {
  print("hydrate " + code);
  return code.length;
}

function renderComment(comment) {
  var html = "<p class='comment'>" + comment.text + "</p>";
  panel.innerHTML = html; // expect: js-innerhtml-assign
  footer.innerHTML = "<small>static footer text</small>";
  panel.title = comment.author;
}

function hydrate(comment) {
  return eval(comment.script); // expect: js-eval-usage
}

print("hydrated", hydrate({ script: "initTooltips()" }));
renderComment({ text: "<img src=x onerror=steal()>", author: "mallory" });
print(panel.innerHTML);
print(footer.innerHTML);
