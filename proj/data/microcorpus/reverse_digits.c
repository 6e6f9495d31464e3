int reverse_digits(int n) {
  int rev = 0, sign = 1;
  if (n < 0) {
    sign = -1;
    n = -n;
  }
  while (n > 0) {
    rev = rev * 10 + n % 10;
    n /= 10;
  }
  return sign * rev;
}
