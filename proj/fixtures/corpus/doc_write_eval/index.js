var document = {
  write: function (markup) {
    print("document: " + markup);
  }
};
function eval(code) {
  print("evaluating " + code);
  return 1;
}

function banner(user) {
  var greeting = "Welcome back " + user;
  document.write("<div>" + greeting + "</div>"); // expect: js-document-write
  return eval("track('" + user + "')"); // expect: js-eval-usage
}

var settings = { theme: "dark", language: "english" };
print("banner", banner("guest-user"));
print(settings.theme);
