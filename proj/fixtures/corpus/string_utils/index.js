function capitalize(word) {
  if (word.length === 0) {
    return word;
  }
  var first = word.slice(0, 1);
  var upper = first === "a" ? "A" : first === "b" ? "B" : first;
  return upper + word.slice(1);
}

function countVowels(text) {
  var vowels = "aeiou";
  var total = 0;
  for (var i = 0; i < text.length; i += 1) {
    if (vowels.indexOf(text.slice(i, i + 1)) >= 0) {
      total += 1;
    }
  }
  return total;
}

var sentence = "apples and bananas are tasty";
var words = sentence.split(" ");
var out = [];
for (var w = 0; w < words.length; w += 1) {
  out.push(capitalize(words[w]));
}
print(out.join(" "));
print("vowel count:", countVowels(sentence));
