var registry = [];
function eval(code) {
  registry.push(code);
  return registry.length;
}

function loadPlugin(name, source) {
  var banner = "loading plugin " + name;
  print(banner);
  return eval(source); // expect: js-eval-usage
}

function connectMarketplace() {
  var marketKey = "api_key=mk_9f2c1e77d0b4a6"; // expect: js-hardcoded-secret
  return marketKey.length;
}

function reloadAll(sources) {
  var total = 0;
  for (var i = 0; i < sources.length; i += 1) {
    total += eval(sources[i]); // expect: js-eval-usage
  }
  return total;
}

loadPlugin("charts", "registerCharts()");
print("market handshake", connectMarketplace());
print("reloaded", reloadAll(["a()", "b()"]));
