function openAccount(owner, balance) {
  var account = { owner: owner, balance: balance, history: [] };
  return account;
}

function deposit(account, amount) {
  if (amount <= 0) {
    account.history.push("rejected deposit");
    return false;
  }
  account.balance += amount;
  account.history.push("deposit " + amount);
  return true;
}

function withdraw(account, amount) {
  var allowed = amount <= account.balance;
  if (allowed) {
    account.balance -= amount;
    account.history.push("withdraw " + amount);
  } else {
    account.history.push("insufficient funds");
  }
  return allowed;
}

var acct = openAccount("Morgan", 50);
deposit(acct, 25);
withdraw(acct, 100);
withdraw(acct, 30);
deposit(acct, -5);
print(acct.owner, acct.balance);
print(acct.history.join("; "));
