/*
  This is capi.cpp, part of smallchar.
*/
