CLI_TITLE = "[bold green_yellow]Cech Zigzag CLI[/bold green_yellow]"
CLI_DESC = """
[pale_turquoise1]Nerves of covers, saturation, Čech double complexes and the zig-zag
diagram chase, computed over the integers.[/pale_turquoise1]

[italic gold1]Every certificate carries an explicit integral coboundary witness.[/italic gold1]
"""
INPUT_HELP = (
    "Complex file (its star cover is used), cover file, or the name of a corpus entry."
)
DEGREE_HELP = "Cohomological degree k. All degrees up to the dimension when omitted."

NERVE_HELP = "[yellow]List the nerve simplices grouped by dimension.[/yellow]"
SATURATE_HELP = "[yellow]Saturate a cover and show the member order.[/yellow]"
COHOMOLOGY_HELP = "[yellow]Čech, nerve and space cohomology groups (SNF).[/yellow]"
CHASE_HELP = "[yellow]Zig-zag chase of every cohomology generator.[/yellow]"
CERTIFY_HELP = (
    "[yellow]Certify chase = sign · evaluation up to an explicit Čech coboundary.[/yellow]"
)
CORPUS_HELP = "[yellow]Run the acceptance suite over the bundled corpus.[/yellow]"
