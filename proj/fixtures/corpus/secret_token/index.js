function githubClient(repo) {
  var accessToken = "Z2hwX2FiY2RlZmdoaWprbG1ub3BxcnN0dXZ3eHl6MDEyMzQ1"; // expect: js-hardcoded-secret
  var header = "token " + accessToken.slice(0, 6);
  return repo + " with " + header;
}

function mailer() {
  var label = "smtp-relay-production";
  var smtpSecret = "c210cF9wYXNzd29yZF9wcm9kX3JlbGF5"; // expect: js-hardcoded-secret
  return label + ":" + smtpSecret.length;
}

print(githubClient("octo/repo"));
print(mailer());
