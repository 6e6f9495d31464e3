int sign_switch(int x) {
  int s = (x > 0) - (x < 0);
  switch (s) {
    case -1:
      return 10;
    case 0:
      return 20;
    default:
      return 30;
  }
}
