function exec(command) {
  print("exec: " + command);
  return 0;
}

function ping(req) {
  var host = req.query.host;
  return exec("ping -c 1 " + host); // expect: js-cmdi-taint
}

var status = ping({ query: { host: "example.org; cat /etc/passwd" } });
print("ping exit status", status);
