// prints a greeting
var greeting = "Hello, world";
var count = 3;
for (var i = 0; i < count; i += 1) {
  print(greeting + " #" + (i + 1));
}
