collect_ignore = ["src/cogslant/__main__.py", "scripts", "demos"]
