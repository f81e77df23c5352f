var res = {
  send: function (body) {
    print("response: " + body);
  }
};

function renderProfile(req) {
  var bio = req.params.bio;
  var page = "<div class='bio'>" + bio + "</div>";
  res.send(page); // expect: js-xss-taint
}

function renderTitle(req) {
  var title = req.query.title;
  res.send("<title>" + title + "</title>"); // expect: js-xss-taint
}

var req = { params: { bio: "<b>hi</b>" }, query: { title: "Profile page" } };
renderProfile(req);
renderTitle(req);
