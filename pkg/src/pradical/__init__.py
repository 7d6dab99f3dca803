"""Prime submodules, prime radicals and radical-type properties of modules."""
