var inventory = {
  apples: 12,
  pears: 4,
  plums: 0
};

function restock(store, item, amount) {
  var current = store[item];
  if (typeof current !== "number") {
    current = 0;
  }
  store[item] = current + amount;
  return store[item];
}

function lowStock(store, names, threshold) {
  var low = [];
  for (var i = 0; i < names.length; i += 1) {
    if (store[names[i]] < threshold) {
      low.push(names[i]);
    }
  }
  return low;
}

restock(inventory, "plums", 6);
restock(inventory, "cherries", 20);
print("low stock items:", lowStock(inventory, ["apples", "pears", "plums", "cherries"], 5).join(","));
