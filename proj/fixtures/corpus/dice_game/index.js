function roll() {
  return 1 + Math.floor(rand() * 6);
}

function play(rounds) {
  var home = 0;
  var away = 0;
  for (var r = 0; r < rounds; r += 1) {
    var a = roll();
    var b = roll();
    if (a > b) {
      home += 1;
    } else if (b > a) {
      away += 1;
    }
  }
  return home === away ? "draw game" : home > away ? "home team wins" : "away team wins";
}

print(play(5));
print(play(11));
