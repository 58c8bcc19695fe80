from gjx.cli.main import run

run()
