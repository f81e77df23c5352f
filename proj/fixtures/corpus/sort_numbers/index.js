function insertionSort(values) {
  var sorted = values.slice(0);
  for (var i = 1; i < sorted.length; i += 1) {
    var current = sorted[i];
    var j = i - 1;
    while (j >= 0 && sorted[j] > current) {
      sorted[j + 1] = sorted[j];
      j -= 1;
    }
    sorted[j + 1] = current;
  }
  return sorted;
}

function randomList(size) {
  var list = [];
  for (var n = 0; n < size; n += 1) {
    list.push(Math.floor(rand() * 100));
  }
  return list;
}

var input = randomList(8);
print("unsorted values:", input.join(" "));
print("sorted values:", insertionSort(input).join(" "));
