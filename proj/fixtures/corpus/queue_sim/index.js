function simulate(customers, tellers) {
  var waiting = [];
  var served = 0;
  var tick = 0;
  do {
    if (tick < customers) {
      waiting.push(tick);
    }
    var free = tellers;
    while (free > 0 && waiting.length > 0) {
      waiting = waiting.slice(1);
      served += 1;
      free -= 1;
    }
    tick += 1;
  } while (tick < customers + 3);
  return served;
}

var scenarios = [[5, 1], [9, 2], [4, 4]];
for (var s = 0; s < scenarios.length; s += 1) {
  var result = simulate(scenarios[s][0], scenarios[s][1]);
  print("scenario result:", s, result);
}
