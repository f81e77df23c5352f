function zeros(rows, cols) {
  var m = [];
  for (var r = 0; r < rows; r += 1) {
    var row = [];
    for (var c = 0; c < cols; c += 1) {
      row.push(0);
    }
    m.push(row);
  }
  return m;
}

function multiply(a, b) {
  var out = zeros(a.length, b[0].length);
  for (var i = 0; i < a.length; i += 1) {
    for (var j = 0; j < b[0].length; j += 1) {
      var sum = 0;
      for (var k = 0; k < b.length; k += 1) {
        sum += a[i][k] * b[k][j];
      }
      out[i][j] = sum;
    }
  }
  return out;
}

var left = [[1, 2], [3, 4]];
var right = [[5, 6], [7, 8]];
var product = multiply(left, right);
print("matrix product:", product[0].join(","), product[1].join(","));
