function letter(score) {
  switch (Math.floor(score / 10)) {
    case 10:
    case 9:
      return "A";
    case 8:
      return "B";
    case 7:
      return "C";
    default:
      return "F";
  }
}

function average(scores) {
  var total = 0;
  for (var i = 0; i < scores.length; i += 1) {
    total += scores[i];
  }
  return scores.length === 0 ? 0 : total / scores.length;
}

var students = { alice: [95, 88, 92], brian: [72, 65, 80], chloe: [] };
var names = ["alice", "brian", "chloe"];
for (var n = 0; n < names.length; n += 1) {
  var avg = average(students[names[n]]);
  print(names[n], "average grade", avg, letter(avg));
}
