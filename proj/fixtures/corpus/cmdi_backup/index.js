var shell = {
  exec: function (command) {
    print("shell: " + command);
    return command.length;
  }
};

function eval(code) {
  print("schedule " + code);
  return 24;
}

function loadSchedule(text) {
  return eval(text); // expect: js-eval-usage
}

function backup(req) {
  var name = req.params.name;
  shell.exec("tar czf /backups/" + name + ".tgz /srv/data"); // expect: js-cmdi-taint
}

function rotate(req) {
  var keep = req.query.keep;
  var cmd = "find /backups -mtime +" + keep + " -delete";
  shell.exec(cmd); // expect: js-cmdi-taint
}

var req = { params: { name: "nightly && rm -rf /" }, query: { keep: "7" } };
backup(req);
rotate(req);
print("interval hours", loadSchedule("every(24)"));
