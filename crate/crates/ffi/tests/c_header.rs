//! Compiles and runs a C program against the generated header and the
//! static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "smm.h"

int main(void) {
    const char *z2 = "{\"size\":2,\"table\":[[0,1],[1,0]],\"unit\":0,\"T\":[0,1],\"Q\":[0,1],"
                     "\"mu\":1,\"eta\":1,\"delta\":1,\"eps\":1}";
    SmmInstance *inst = NULL;
    if (smm_instance_from_json(z2, &inst) != SMM_STATUS_OK) return 10;
    size_t violations = 99;
    if (smm_instance_check(inst, SMM_PRESENTATION_MU_DELTA, &violations) != SMM_STATUS_OK) return 11;
    if (violations != 0) return 12;
    smm_instance_free(inst);

    SmmInstanceList *list = NULL;
    if (smm_enumerate(2, &list) != SMM_STATUS_OK) return 13;
    printf("%zu\n", smm_list_len(list));
    smm_list_free(list);

    char *d = NULL;
    if (smm_prove("eps*T(a)*eta", "a", 12, 1000000, &d) != SMM_STATUS_OK) return 14;
    if (smm_verify(d) != SMM_STATUS_OK) return 15;
    smm_string_free(d);

    if (smm_instance_from_json("[", &inst) != SMM_STATUS_PARSE) return 16;
    if (strlen(smm_last_error()) == 0) return 17;
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<this test> -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libsmm_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());

    let work = tempfile::tempdir().unwrap();
    let src = work.path().join("main.c");
    let exe = work.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .expect("cc");
    assert!(cc.status.success(), "{}", String::from_utf8_lossy(&cc.stderr));

    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "4\n");
}
