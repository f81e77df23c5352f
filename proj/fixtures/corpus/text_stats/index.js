function wordFrequencies(text) {
  var words = text.split(" ");
  var counts = {};
  var order = [];
  for (var i = 0; i < words.length; i += 1) {
    var w = words[i];
    if (w === "") {
      continue;
    }
    if (counts[w] === undefined) {
      counts[w] = 0;
      order.push(w);
    }
    counts[w] += 1;
  }
  var parts = [];
  for (var j = 0; j < order.length; j += 1) {
    parts.push(order[j] + "=" + counts[order[j]]);
  }
  return parts.join(" ");
}

var paragraph = "the quick brown fox jumps over the lazy dog the end";
print("frequencies:", wordFrequencies(paragraph));
print("characters:", paragraph.length);
