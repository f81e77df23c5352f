function fib(n) {
  if (n < 2) {
    return n;
  }
  return fib(n - 1) + fib(n - 2);
}

function fibTable(limit) {
  var out = [];
  var k = 0;
  while (k <= limit) {
    out.push(fib(k));
    k += 1;
  }
  return out;
}

print("fibonacci sequence:", fibTable(12).join(","));
