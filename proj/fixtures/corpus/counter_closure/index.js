function makeCounter(start, step) {
  var value = start;
  return {
    next: function () {
      value += step;
      return value;
    },
    reset: function () {
      value = start;
      return value;
    }
  };
}

var byTwo = makeCounter(0, 2);
var byTen = makeCounter(100, 10);
byTwo.next();
byTwo.next();
byTen.next();
print("counter states:", byTwo.next(), byTen.next());
print("after reset:", byTwo.reset());
