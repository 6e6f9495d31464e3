int power_mod(int base, int e) {
  long result = 1;
  long b = base % 97;
  if (b < 0)
    b += 97;
  while (e > 0) {
    if (e & 1)
      result = result * b % 97;
    b = b * b % 97;
    e >>= 1;
  }
  return (int)result;
}
