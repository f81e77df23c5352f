function exec(command) {
  print("exec: " + command);
  return 0;
}

function escapeShell(value) {
  return "'" + String(value).split("'").join("") + "'";
}

function convert(req) {
  var source = req.query.file;
  exec("convert " + source + " output.png"); // expect: js-cmdi-taint
}

function thumbnail(req) {
  var safe = escapeShell(req.query.file);
  exec("convert -resize 64x64 " + safe + " thumb.png");
}

var req = { query: { file: "cat.jpg; reboot" } };
convert(req);
thumbnail(req);
