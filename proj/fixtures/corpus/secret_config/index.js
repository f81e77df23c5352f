var connections = [];

function connect(host) {
  var credentials = "password=Sup3rS3cretValue!"; // expect: js-hardcoded-secret
  connections.push(host + " " + credentials.length);
  return connections.length;
}

function billing() {
  var apiConfig = "api_key: sk_live_51HxYzAbCdEf"; // expect: js-hardcoded-secret
  var parts = apiConfig.split(": ");
  return parts[0];
}

print("connections", connect("db.internal.example"));
print("billing", billing());
