/*
  This is isogeny.cpp, part of smallchar.
*/
