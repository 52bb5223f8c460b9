"""Brute-force enumeration of cubic surfaces over F_2, used as an independent check."""
